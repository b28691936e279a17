#include "modinv/group.hpp"

#include <deque>
#include <stdexcept>

namespace modinv {

GroupElement::GroupElement(MatrixGF m) : mat_(std::move(m)) {
  if (mat_.rows() != mat_.cols())
    throw std::invalid_argument("group element must be square");
  if (!mat_.inverse().has_value())
    throw std::invalid_argument("group element must be invertible");
}

GroupElement GroupElement::inverse() const { return GroupElement(*mat_.inverse()); }

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  return GroupElement(a.mat_ * b.mat_);
}

bool operator==(const GroupElement& a, const GroupElement& b) {
  return a.mat_ == b.mat_;
}

Group::Group(PolyRingPtr ring, std::vector<GroupElement> gens,
             std::vector<GroupElement> elems)
    : ring_(std::move(ring)), generators_(std::move(gens)),
      elements_(std::move(elems)) {}

Group Group::close(PolyRingPtr ring, std::vector<MatrixGF> generators,
                   std::size_t size_cap) {
  if (!ring) throw std::invalid_argument("null ring");
  const int d = ring->nvars();
  std::vector<GroupElement> gens;
  gens.reserve(generators.size());
  for (auto& m : generators) {
    if (m.rows() != d || m.cols() != d)
      throw std::invalid_argument("generator dimension does not match the ring");
    if (!m.field()->same_field(*ring->field()))
      throw std::invalid_argument("generator field does not match the ring");
    gens.emplace_back(std::move(m));
  }

  auto key = [d](const MatrixGF& m) {
    std::vector<FieldCode> k;
    k.reserve(static_cast<std::size_t>(d) * d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) k.push_back(m.at(i, j));
    return k;
  };

  std::vector<GroupElement> elems;
  std::map<std::vector<FieldCode>, int> seen;
  elems.emplace_back(MatrixGF::identity(ring->field(), d));
  seen.emplace(key(elems[0].matrix()), 0);
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& g : gens) {
      GroupElement next = elems[head] * g;
      auto k = key(next.matrix());
      if (seen.contains(k)) continue;
      if (elems.size() >= size_cap)
        throw std::runtime_error("group closure exceeded size cap of " +
                                 std::to_string(size_cap));
      seen.emplace(std::move(k), static_cast<int>(elems.size()));
      elems.push_back(std::move(next));
    }
  }
  return Group(std::move(ring), std::move(gens), std::move(elems));
}

Polynomial act(const MatrixGF& g, const Polynomial& f) {
  const PolyRingPtr& ring = f.ring();
  const int d = ring->nvars();
  if (g.rows() != d || g.cols() != d)
    throw std::invalid_argument("matrix dimension does not match the ring");
  if (!g.field()->same_field(*ring->field()))
    throw std::invalid_argument("matrix field does not match the ring");
  std::vector<Polynomial> images;
  images.reserve(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    std::vector<Term> terms;
    for (int j = 0; j < d; ++j) {
      if (g.at(j, i) == 0) continue;
      Exponents e(d, 0);
      e[j] = 1;
      terms.push_back({std::move(e), g.at(j, i)});
    }
    images.push_back(Polynomial::from_terms(ring, std::move(terms)));
  }
  return f.substitute(images);
}

Polynomial act(const GroupElement& g, const Polynomial& f) {
  return act(g.matrix(), f);
}

bool is_invariant(const Group& G, const Polynomial& f) {
  if (!f.ring()->same_ring(*G.ring()))
    throw std::invalid_argument("polynomial ring does not match the group");
  for (const auto& g : G.generators())
    if (act(g, f) != f) return false;
  return true;
}

std::vector<Polynomial> invariant_basis(const Group& G, int degree) {
  const PolyRingPtr& ring = G.ring();
  MonomialBasis mono(ring, degree);
  const int dim = mono.size();
  if (dim == 0) return {};
  if (G.generators().empty()) {
    std::vector<Polynomial> all;
    all.reserve(static_cast<std::size_t>(dim));
    for (const auto& e : mono.exponents())
      all.push_back(Polynomial::monomial(ring, e, 1));
    return all;
  }

  const auto field = ring->field();
  const int ngens = static_cast<int>(G.generators().size());
  MatrixGF stacked(field, dim * ngens, dim);
  for (int gi = 0; gi < ngens; ++gi) {
    const auto& g = G.generators()[static_cast<std::size_t>(gi)];
    for (int j = 0; j < dim; ++j) {
      const Polynomial image =
          act(g, Polynomial::monomial(ring, mono.exponents()[static_cast<std::size_t>(j)], 1));
      const auto coords = mono.coords_of(image);
      for (int i = 0; i < dim; ++i) stacked.set(gi * dim + i, j, coords[static_cast<std::size_t>(i)]);
      stacked.set(gi * dim + j, j,
                  field->sub(stacked.at(gi * dim + j, j), 1));
    }
  }
  MatrixGF k = stacked.kernel_basis();
  std::vector<Polynomial> out;
  out.reserve(static_cast<std::size_t>(k.cols()));
  for (int c = 0; c < k.cols(); ++c) {
    const auto col = k.column(c);
    out.push_back(mono.from_coords(col));
  }
  return out;
}

MatrixGF InvariantSpace::coords_many(const std::vector<Polynomial>& fs) const {
  MatrixGF b(mono.ring()->field(), mono.size(), static_cast<int>(fs.size()));
  for (std::size_t c = 0; c < fs.size(); ++c) {
    const auto coords = mono.coords_of(fs[c]);
    for (int r = 0; r < mono.size(); ++r) b.set(r, static_cast<int>(c), coords[static_cast<std::size_t>(r)]);
  }
  auto sol = mat.solve(b);
  if (!sol.has_value())
    throw std::invalid_argument("polynomial is not in the invariant subspace");
  return *sol;
}

std::vector<FieldCode> InvariantSpace::coords_of(const Polynomial& f) const {
  return coords_many({f}).column(0);
}

Polynomial InvariantSpace::from_coords(std::span<const FieldCode> coords) const {
  if (static_cast<int>(coords.size()) != dim())
    throw std::invalid_argument("coordinate vector has wrong length");
  auto out = Polynomial::zero(mono.ring());
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i] != 0) out += basis[i].scaled(coords[i]);
  return out;
}

InvariantBasisCache::InvariantBasisCache(std::shared_ptr<const Group> group)
    : group_(std::move(group)) {
  if (!group_) throw std::invalid_argument("null group");
}

const InvariantSpace& InvariantBasisCache::get(int degree) {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = memo_.find(degree);
  if (it != memo_.end()) return *it->second;

  auto basis = invariant_basis(*group_, degree);
  auto space = std::make_unique<InvariantSpace>(InvariantSpace{
      MonomialBasis(group_->ring(), degree), std::move(basis),
      MatrixGF(group_->ring()->field(), 0, 0)});
  std::vector<std::vector<FieldCode>> cols;
  cols.reserve(space->basis.size());
  for (const auto& f : space->basis) cols.push_back(space->mono.coords_of(f));
  space->mat = MatrixGF::from_columns(group_->ring()->field(), space->mono.size(), cols);
  auto [pos, inserted] = memo_.emplace(degree, std::move(space));
  return *pos->second;
}

std::vector<MatrixGF> trivial_generators() { return {}; }

namespace {

FieldCode primitive_element(const FieldSpec& f) {
  for (FieldCode c = 1; c < f.q(); ++c) {
    std::uint64_t order = 1;
    FieldCode v = c;
    while (v != 1) {
      v = f.mul(v, c);
      ++order;
    }
    if (order == f.q() - 1) return c;
  }
  throw std::logic_error("no primitive element found");
}

}  // namespace

std::vector<MatrixGF> full_gl_generators(const FieldSpecPtr& field, int d) {
  if (d < 1) throw std::invalid_argument("d must be >= 1");
  std::vector<MatrixGF> out;
  const FieldCode alpha = primitive_element(*field);
  if (alpha != 1) {
    MatrixGF diag = MatrixGF::identity(field, d);
    diag.set(0, 0, alpha);
    out.push_back(std::move(diag));
  }
  if (d >= 2) {
    MatrixGF perm(field, d, d);
    for (int i = 0; i < d; ++i) perm.set(i, (i + 1) % d, 1);
    out.push_back(std::move(perm));
    MatrixGF trans = MatrixGF::identity(field, d);
    trans.set(0, 1, 1);
    out.push_back(std::move(trans));
  }
  return out;
}

std::vector<MatrixGF> cyclic_transvection_generators(const FieldSpecPtr& field, int d) {
  if (d < 2) throw std::invalid_argument("transvection preset requires d >= 2");
  MatrixGF trans = MatrixGF::identity(field, d);
  trans.set(0, 1, 1);
  return {trans};
}

}  // namespace modinv
