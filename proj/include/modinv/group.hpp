#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "modinv/matrix.hpp"
#include "modinv/poly.hpp"

namespace modinv {

// An invertible d x d matrix over GF(q).
class GroupElement {
public:
  explicit GroupElement(MatrixGF m);  // throws if not square invertible

  const MatrixGF& matrix() const { return mat_; }
  int dim() const { return mat_.rows(); }
  GroupElement inverse() const;
  friend GroupElement operator*(const GroupElement& a, const GroupElement& b);
  friend bool operator==(const GroupElement& a, const GroupElement& b);

private:
  MatrixGF mat_;
};

// A finite subgroup of GL(d, q) given by generators, together with the
// polynomial ring it acts on. The element list is the deterministic BFS
// closure of the generators.
class Group {
public:
  // Throws std::runtime_error if the closure exceeds size_cap elements.
  static Group close(PolyRingPtr ring, std::vector<MatrixGF> generators,
                     std::size_t size_cap = 1'000'000);

  const PolyRingPtr& ring() const { return ring_; }
  int dim() const { return ring_->nvars(); }
  const std::vector<GroupElement>& generators() const { return generators_; }
  const std::vector<GroupElement>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  bool is_trivial() const { return elements_.size() == 1; }

private:
  Group(PolyRingPtr ring, std::vector<GroupElement> gens,
        std::vector<GroupElement> elems);

  PolyRingPtr ring_;
  std::vector<GroupElement> generators_;
  std::vector<GroupElement> elements_;
};

// Left action by linear substitution: x_i maps to sum_j g[j][i] * x_j, so
// that act(g*h, f) == act(g, act(h, f)).
Polynomial act(const MatrixGF& g, const Polynomial& f);
Polynomial act(const GroupElement& g, const Polynomial& f);

bool is_invariant(const Group& G, const Polynomial& f);

// Basis of the G-invariant subspace of the degree-n graded piece, computed as
// the joint kernel of act(g) - id over the generators. Deterministic order.
std::vector<Polynomial> invariant_basis(const Group& G, int degree);

// A graded piece of the invariant ring with coordinate bookkeeping: `mat` has
// one column per basis element, rows indexed by the degree-n monomials.
struct InvariantSpace {
  MonomialBasis mono;
  std::vector<Polynomial> basis;
  MatrixGF mat;

  int dim() const { return static_cast<int>(basis.size()); }
  // Coordinates of invariant polynomials in this basis; throws
  // std::invalid_argument if some input is not in the span.
  MatrixGF coords_many(const std::vector<Polynomial>& fs) const;
  std::vector<FieldCode> coords_of(const Polynomial& f) const;
  Polynomial from_coords(std::span<const FieldCode> coords) const;
};

// Thread-safe memo of invariant graded pieces of one group.
class InvariantBasisCache {
public:
  explicit InvariantBasisCache(std::shared_ptr<const Group> group);

  const Group& group() const { return *group_; }
  const InvariantSpace& get(int degree);

private:
  std::shared_ptr<const Group> group_;
  std::mutex mu_;
  std::map<int, std::unique_ptr<const InvariantSpace>> memo_;
};

// Generator presets.
std::vector<MatrixGF> trivial_generators();
// Generates all of GL(d, q): a primitive diagonal block, a cyclic coordinate
// permutation, and an elementary transvection (the redundant ones dropped for
// small q, d).
std::vector<MatrixGF> full_gl_generators(const FieldSpecPtr& field, int d);
// The cyclic group of order p generated by I + E_{12}; requires d >= 2.
std::vector<MatrixGF> cyclic_transvection_generators(const FieldSpecPtr& field, int d);

}  // namespace modinv
