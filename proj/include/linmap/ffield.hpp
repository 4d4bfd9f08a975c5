#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "linmap/error.hpp"
#include "linmap/nat.hpp"

namespace linmap {

/// Element of F_q, q = p^d: the d coordinates w.r.t. the power basis of the
/// field modulus, each in [0, p).
struct FieldElement {
  std::vector<uint32_t> c;

  bool operator==(const FieldElement&) const = default;
};

/// Index-valued add/mul tables for small fields (q <= kOpTableLimit).
struct OpTables {
  uint32_t q = 0;
  std::vector<uint16_t> add;  // q*q
  std::vector<uint16_t> mul;  // q*q
  std::vector<uint16_t> neg;  // q
  std::vector<uint16_t> inv;  // q, inv[0] unused

  uint16_t padd(uint32_t a, uint32_t b) const { return add[a * q + b]; }
  uint16_t pmul(uint32_t a, uint32_t b) const { return mul[a * q + b]; }
};

inline constexpr uint32_t kOpTableLimit = 1024;

/// Arithmetic context for F_q with q = p^d. The modulus is the
/// lexicographically smallest monic irreducible of degree d over F_p
/// (coefficient tuples ordered low-degree-first), so a given (p, d) always
/// yields the same field representation. Immutable and safe to share.
class FieldCtx {
 public:
  FieldCtx(unsigned long p, unsigned d);

  unsigned long p() const { return p_; }
  unsigned d() const { return d_; }
  const Nat& q() const { return q_; }
  /// q as a machine word; valid because of the p^d <= 2^20 construction guard.
  uint64_t q_ulong() const { return q_ul_; }
  /// Monic modulus over F_p, low-degree-first, length d+1. For d = 1 this is x.
  const std::vector<uint32_t>& modulus() const { return modulus_; }

  FieldElement zero() const;
  FieldElement one() const;
  bool is_zero(const FieldElement& a) const;
  bool is_one(const FieldElement& a) const;

  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  FieldElement inv(const FieldElement& a) const;  // ZeroModulus on a = 0

  uint64_t index_of(const FieldElement& a) const;
  FieldElement from_index(uint64_t i) const;

  /// Lazily built index tables; TooLarge when q > kOpTableLimit.
  const OpTables& tables() const;

 private:
  unsigned long p_;
  unsigned d_;
  Nat q_;
  uint64_t q_ul_;
  std::vector<uint32_t> modulus_;

  struct TableCache;
  std::shared_ptr<TableCache> cache_;
};

/// Univariate polynomial over F_q, coefficients low-degree-first with the
/// leading zero stripped; the zero polynomial is the empty sequence.
struct Poly {
  std::vector<FieldElement> c;

  bool operator==(const Poly&) const = default;
};

int poly_deg(const Poly& f);  // -1 for the zero polynomial
Poly poly_zero();
Poly poly_one(const FieldCtx& F);
Poly poly_x(const FieldCtx& F);
Poly poly_from_coeffs(const FieldCtx& F, std::vector<FieldElement> coeffs);
bool poly_is_monic(const FieldCtx& F, const Poly& f);

Poly poly_add(const FieldCtx& F, const Poly& a, const Poly& b);
Poly poly_sub(const FieldCtx& F, const Poly& a, const Poly& b);
Poly poly_mul(const FieldCtx& F, const Poly& a, const Poly& b);
/// Quotient/remainder by a nonzero divisor; ZeroModulus otherwise.
void poly_divmod(const FieldCtx& F, const Poly& a, const Poly& b, Poly* quot, Poly* rem);
Poly poly_mod(const FieldCtx& F, const Poly& a, const Poly& b);
Poly poly_pow(const FieldCtx& F, const Poly& f, unsigned e);

/// base^e mod modpoly by square-and-multiply; deg(modpoly) >= 1 required.
Poly poly_mod_pow(const FieldCtx& F, const Poly& base, const Nat& e, const Poly& modpoly);

/// Trial-division irreducibility test; intended for deg(f) <= 6 (guarded by
/// q^deg <= 2^24).
bool poly_is_irreducible(const FieldCtx& F, const Poly& f);

/// All monic irreducibles of degree t over F_q, sorted lexicographically
/// (low-degree-first coefficient tuples). Guards: t <= 6 and q^t <= 2^24.
std::vector<Poly> irreducibles(const FieldCtx& F, unsigned t);

std::string poly_to_string(const FieldCtx& F, const Poly& f);
Poly poly_parse(const FieldCtx& F, const std::string& text);
std::string field_element_to_string(const FieldCtx& F, const FieldElement& a);
FieldElement field_element_parse(const FieldCtx& F, const std::string& token);

/// Square matrix over F_q, row-major.
struct Matrix {
  unsigned n = 0;
  std::vector<FieldElement> a;

  FieldElement& at(unsigned i, unsigned j) { return a[i * n + j]; }
  const FieldElement& at(unsigned i, unsigned j) const { return a[i * n + j]; }

  bool operator==(const Matrix&) const = default;
};

Matrix mat_zero(const FieldCtx& F, unsigned n);
Matrix mat_identity(const FieldCtx& F, unsigned n);
Matrix mat_mul(const FieldCtx& F, const Matrix& A, const Matrix& B);
Matrix mat_pow(const FieldCtx& F, const Matrix& A, unsigned e);
std::vector<FieldElement> mat_apply(const FieldCtx& F, const Matrix& A,
                                    const std::vector<FieldElement>& v);
bool mat_is_zero(const FieldCtx& F, const Matrix& A);

unsigned mat_rank(const FieldCtx& F, const Matrix& A);
unsigned kernel_dim(const FieldCtx& F, const Matrix& A);
/// Basis of ker A as reduced-echelon rows (empty for invertible A).
std::vector<std::vector<FieldElement>> kernel_basis(const FieldCtx& F, const Matrix& A);
/// Basis of the column space of A as reduced-echelon rows.
std::vector<std::vector<FieldElement>> image_basis(const FieldCtx& F, const Matrix& A);

/// Companion matrix of a monic polynomial of degree >= 1 (multiplication by x
/// on the power basis).
Matrix companion(const FieldCtx& F, const Poly& monic);

std::string mat_to_string(const FieldCtx& F, const Matrix& A);
Matrix mat_parse(const FieldCtx& F, const std::string& text);

/// Row-reduce in place; returns pivot column indices. Rows are arbitrary
/// equal-length vectors over F_q.
std::vector<unsigned> rref(const FieldCtx& F, std::vector<std::vector<FieldElement>>& rows);

}  // namespace linmap
