#pragma once

#include <memory>
#include <string>
#include <vector>

#include "dgcm/ideal.hpp"

namespace dgcm {

/// Degrees of the basis vectors of a graded free module P^r.
using Degrees = std::vector<int>;

/// Polynomial matrix stored by columns: column j is the image of the j-th
/// source basis vector, an element of P^rows.
struct Matrix {
  std::size_t rows = 0;
  std::vector<Poly> columns;

  std::size_t cols() const { return columns.size(); }
  Poly entry(std::size_t i, std::size_t j) const { return component(columns[j], static_cast<int>(i)); }
  bool is_zero() const;

  static Matrix zero(std::size_t rows, std::size_t cols);
  static Matrix identity(std::size_t n);
  /// Columns given as rows-many polynomial lists.
  static Matrix from_entries(std::size_t rows, const std::vector<std::vector<Poly>>& cols,
                             const PrimeField& f);

  bool operator==(const Matrix&) const = default;
};

Poly apply(const Matrix& a, const Poly& v, const PrimeField& f);
/// a * b (apply b first).
Matrix compose(const Matrix& a, const Matrix& b, const PrimeField& f);
Matrix transpose(const Matrix& a, const PrimeField& f);
Matrix scale(const Matrix& a, Coeff c, const PrimeField& f);
Matrix block_diagonal(const Matrix& a, const Matrix& b);
Matrix multiply_entries(const Matrix& a, const Poly& x, const PrimeField& f);

/// Degree of a homogeneous module element; throws UnsupportedInput when the
/// element is inhomogeneous.  nullopt for zero.
std::optional<int> vector_degree(const Poly& v, const Degrees& degrees);

/// Generators of {v in P^m : A v in U}, minimal in the graded sense.
/// `source` holds the degrees of the m source basis vectors.
std::vector<Poly> kernel_modulo(const Ring& ring, const Matrix& a, const std::vector<Poly>& u,
                                const Degrees& source);
/// Minimal generators of the image of S in P^r / U, taken from S in order of
/// increasing degree.
std::vector<Poly> minimal_generators(const Ring& ring, const std::vector<Poly>& s,
                                     const std::vector<Poly>& u, const Degrees& degrees);

/// Finitely presented graded module P^r / N.  Modules over R = P/I carry the
/// relations I * e_j explicitly.
class PresentedModule {
 public:
  PresentedModule(RingPtr ring, Degrees degrees, std::vector<Poly> relations);
  static PresentedModule over_quotient(const Ideal& quotient, Degrees degrees,
                                       std::vector<Poly> relations);
  static PresentedModule free(RingPtr ring, Degrees degrees);
  static PresentedModule zero(RingPtr ring);
  /// P/J generated in the given degree.
  static PresentedModule cyclic(const Ideal& j, int degree = 0);
  /// The submodule of R = P/I generated by `gens`, presented on those
  /// generators.
  static PresentedModule ideal_module(const Ideal& quotient, const std::vector<Poly>& gens);

  const Ring& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }
  std::size_t rank() const { return degrees_.size(); }
  const Degrees& degrees() const { return degrees_; }
  const std::vector<Poly>& relations() const { return relations_; }
  const GroebnerBasis& relation_basis() const;

  bool is_zero() const;
  bool is_free_presentation() const { return relations_.empty(); }
  /// Relations reduced to component-wise normal forms modulo nothing; used
  /// for display.
  std::string to_string() const;

 private:
  struct Cache;
  RingPtr ring_;
  Degrees degrees_;
  std::vector<Poly> relations_;
  std::shared_ptr<Cache> cache_;
};

/// Removes generators that are killed by a relation with a unit entry; for
/// graded input the result is a minimal presentation.
PresentedModule prune(const PresentedModule& m);

/// (gens + U) / U inside P^r with basis degrees `degrees`, presented on a
/// minimal subset of `gens`.
PresentedModule subquotient(const RingPtr& ring, const std::vector<Poly>& gens,
                            const std::vector<Poly>& u, const Degrees& degrees);

PresentedModule direct_sum(const PresentedModule& a, const PresentedModule& b);
/// M(d): every generator degree lowered by d, so that M(d)_k = M_{k+d}.
PresentedModule twist(const PresentedModule& m, int d);

Ideal annihilator(const PresentedModule& m);
/// Krull dimension of P/ann(M); -1 for the zero module.
int module_krull_dim(const PresentedModule& m);
/// dim_k of the degree-`degree` part.
long long hilbert_function(const PresentedModule& m, int degree);

/// Kernel of multiplication by a homogeneous x on M, as a module.
PresentedModule multiplication_kernel(const PresentedModule& m, const Poly& x);
bool multiplication_injective(const PresentedModule& m, const Poly& x);
/// M / xM.
PresentedModule quotient_by_element(const PresentedModule& m, const Poly& x);
/// True when 0 :_M (x_1, ..., x_n) is nonzero, i.e. the irrelevant ideal is
/// associated to M.
bool has_nonzero_socle(const PresentedModule& m);

/// Degree-0 homomorphism between presented modules, validated on
/// construction: relations of the source land in the relations of the target.
class ModuleMap {
 public:
  ModuleMap(PresentedModule source, PresentedModule target, Matrix matrix);

  const PresentedModule& source() const { return source_; }
  const PresentedModule& target() const { return target_; }
  const Matrix& matrix() const { return matrix_; }

 private:
  PresentedModule source_;
  PresentedModule target_;
  Matrix matrix_;
};

PresentedModule kernel(const ModuleMap& f);
PresentedModule cokernel(const ModuleMap& f);
bool is_injective(const ModuleMap& f);
bool is_surjective(const ModuleMap& f);
bool is_isomorphism(const ModuleMap& f);

/// Columns generating the kernel of a map between free modules.
Matrix syzygies(const ModuleMap& f);

}  // namespace dgcm
