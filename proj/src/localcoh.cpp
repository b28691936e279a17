#include "modinv/localcoh.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>

#include "modinv/steenrod.hpp"

namespace modinv {

namespace {

void validate_ideal(const Group& G, const IdealSpec& ideal) {
  if (ideal.generators.empty())
    throw std::invalid_argument("ideal needs at least one generator");
  for (const auto& f : ideal.generators) {
    if (!f.ring()->same_ring(*G.ring()))
      throw std::invalid_argument("ideal generator from a different ring");
    if (f.is_zero() || !f.is_homogeneous() || f.total_degree() < 1)
      throw std::invalid_argument(
          "ideal generators must be homogeneous of positive degree");
    if (!is_invariant(G, f))
      throw std::invalid_argument("ideal generators must be invariant");
  }
}

void enumerate_subsets(int m, int k, std::vector<int>& cur,
                       std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  int start = cur.empty() ? 0 : cur.back() + 1;
  for (int j = start; j <= m - (k - static_cast<int>(cur.size())); ++j) {
    cur.push_back(j);
    enumerate_subsets(m, k, cur, out);
    cur.pop_back();
  }
}

int env_thread_count() {
  if (const char* env = std::getenv("MODINV_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 1;
}

// Runs fn(0..count-1), split across MODINV_THREADS workers. Each index writes
// only its own result slot, so the partition never affects the output.
void parallel_for(int count, const std::function<void(int)>& fn) {
  int threads = std::min(env_thread_count(), count);
  if (threads <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto worker = [&] {
    for (;;) {
      int i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace

KoszulEngine::KoszulEngine(std::shared_ptr<const Group> group, IdealSpec ideal)
    : ideal_(std::move(ideal)), cache_(std::move(group)) {
  validate_ideal(cache_.group(), ideal_);
}

const std::vector<std::vector<int>>& KoszulEngine::subsets(int k) {
  if (k < 0) throw std::invalid_argument("negative subset size");
  std::lock_guard<std::mutex> lock(mu_);
  auto it = subsets_memo_.find(k);
  if (it == subsets_memo_.end()) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    if (k <= ngens()) enumerate_subsets(ngens(), k, cur, out);
    it = subsets_memo_.emplace(k, std::move(out)).first;
  }
  return it->second;
}

const Polynomial& KoszulEngine::subset_product(const std::vector<int>& subset) {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = subset_product_memo_.find(subset);
  if (it == subset_product_memo_.end()) {
    Polynomial prod =
        Polynomial::constant(group().ring(), group().ring()->field()->one());
    for (int j : subset) prod = prod * ideal_.generators.at(j);
    it = subset_product_memo_.emplace(subset, std::move(prod)).first;
  }
  return it->second;
}

const Polynomial& KoszulEngine::generator_power(int j, int t) {
  if (j < 0 || j >= ngens() || t < 0)
    throw std::invalid_argument("generator power out of range");
  std::lock_guard<std::mutex> lock(mu_);
  auto key = std::make_pair(j, t);
  auto it = gen_power_memo_.find(key);
  if (it == gen_power_memo_.end()) {
    it = gen_power_memo_
             .emplace(key, ideal_.generators[j].pow(static_cast<unsigned>(t)))
             .first;
  }
  return it->second;
}

KoszulEngine::Layout KoszulEngine::layout(int level, int t, int n) {
  if (t < 1) throw std::invalid_argument("truncation must be positive");
  if (level < 0) throw std::invalid_argument("negative level");
  Layout lay;
  lay.level = level;
  lay.truncation = t;
  lay.degree = n;
  lay.subsets = subsets(level);
  for (const auto& T : lay.subsets) {
    int delta = 0;
    for (int j : T) delta += ideal_.generators[j].total_degree();
    int a = n + t * delta;
    lay.component_degrees.push_back(a);
    lay.offsets.push_back(lay.total);
    lay.total += a < 0 ? 0 : cache_.get(a).dim();
  }
  return lay;
}

MatrixGF KoszulEngine::differential(const Layout& from) {
  Layout to = layout(from.level + 1, from.truncation, from.degree);
  const FieldSpecPtr& F = group().ring()->field();
  MatrixGF d(F, to.total, from.total);
  for (std::size_t a = 0; a < from.subsets.size(); ++a) {
    int sdeg = from.component_degrees[a];
    if (sdeg < 0) continue;
    const InvariantSpace& src = cache_.get(sdeg);
    if (src.dim() == 0) continue;
    const std::vector<int>& T = from.subsets[a];
    for (int j = 0; j < ngens(); ++j) {
      if (std::binary_search(T.begin(), T.end(), j)) continue;
      std::vector<int> Tj = T;
      auto pos_it = std::lower_bound(Tj.begin(), Tj.end(), j);
      int pos = static_cast<int>(pos_it - Tj.begin());
      Tj.insert(pos_it, j);
      auto b_it = std::lower_bound(to.subsets.begin(), to.subsets.end(), Tj);
      int b = static_cast<int>(b_it - to.subsets.begin());
      const InvariantSpace& dst = cache_.get(to.component_degrees[b]);
      const Polynomial& mult = generator_power(j, from.truncation);
      std::vector<Polynomial> prods;
      prods.reserve(src.basis.size());
      for (const auto& h : src.basis) prods.push_back(h * mult);
      MatrixGF block = dst.coords_many(prods);
      FieldCode sign = pos % 2 == 0 ? F->one() : F->neg(F->one());
      for (int r = 0; r < block.rows(); ++r)
        for (int c = 0; c < block.cols(); ++c)
          d.set(to.offsets[b] + r, from.offsets[a] + c,
                F->mul(sign, block.at(r, c)));
    }
  }
  return d;
}

MatrixGF KoszulEngine::level_transition(const Layout& from) {
  Layout to = layout(from.level, from.truncation + 1, from.degree);
  const FieldSpecPtr& F = group().ring()->field();
  MatrixGF u(F, to.total, from.total);
  for (std::size_t a = 0; a < from.subsets.size(); ++a) {
    int sdeg = from.component_degrees[a];
    if (sdeg < 0) continue;
    const InvariantSpace& src = cache_.get(sdeg);
    if (src.dim() == 0) continue;
    const InvariantSpace& dst = cache_.get(to.component_degrees[a]);
    const Polynomial& xT = subset_product(from.subsets[a]);
    std::vector<Polynomial> prods;
    prods.reserve(src.basis.size());
    for (const auto& h : src.basis) prods.push_back(h * xT);
    MatrixGF block = dst.coords_many(prods);
    for (int r = 0; r < block.rows(); ++r)
      for (int c = 0; c < block.cols(); ++c)
        u.set(to.offsets[a] + r, from.offsets[a] + c, block.at(r, c));
  }
  return u;
}

KoszulEngine::Cohomology KoszulEngine::cohomology(int i, int t, int n) {
  if (i < 0) throw std::invalid_argument("negative cohomological index");
  const FieldSpecPtr& F = group().ring()->field();
  Cohomology h{layout(i, t, n), 0, MatrixGF(F, 0, 0), MatrixGF(F, 0, 0),
               MatrixGF(F, 0, 0)};
  h.d_out = differential(h.layout);
  MatrixGF kernel = h.d_out.kernel_basis();
  if (i == 0) {
    h.image = MatrixGF(F, h.layout.total, 0);
  } else {
    MatrixGF d_in = differential(layout(i - 1, t, n));
    if (!(h.d_out * d_in).is_zero())
      throw std::logic_error("differential does not square to zero");
    std::vector<int> piv = d_in.independent_columns();
    MatrixGF image(F, h.layout.total, static_cast<int>(piv.size()));
    for (std::size_t c = 0; c < piv.size(); ++c)
      for (int r = 0; r < h.layout.total; ++r)
        image.set(r, static_cast<int>(c), d_in.at(r, piv[c]));
    h.image = std::move(image);
  }
  MatrixGF aug = h.image.augmented(kernel);
  std::vector<int> ind = aug.independent_columns();
  std::vector<int> rep_cols;
  for (int c : ind)
    if (c >= h.image.cols()) rep_cols.push_back(c - h.image.cols());
  h.dim = static_cast<int>(rep_cols.size());
  MatrixGF reps(F, h.layout.total, h.dim);
  for (std::size_t c = 0; c < rep_cols.size(); ++c)
    for (int r = 0; r < h.layout.total; ++r)
      reps.set(r, static_cast<int>(c), kernel.at(r, rep_cols[c]));
  h.reps = std::move(reps);
  return h;
}

std::optional<MatrixGF> KoszulEngine::class_coords(const Cohomology& h,
                                                   const MatrixGF& v) {
  if (v.rows() != h.layout.total)
    throw std::invalid_argument("vector does not match the layout");
  if (!(h.d_out * v).is_zero())
    throw std::logic_error("class_coords applied to a non-cocycle");
  const FieldSpecPtr& F = group().ring()->field();
  MatrixGF basis = h.reps.augmented(h.image);
  std::optional<MatrixGF> sol = basis.solve(v);
  if (!sol) return std::nullopt;
  MatrixGF out(F, h.dim, v.cols());
  for (int r = 0; r < h.dim; ++r)
    for (int c = 0; c < v.cols(); ++c) out.set(r, c, sol->at(r, c));
  return out;
}

MatrixGF KoszulEngine::transition(const Cohomology& at_t,
                                  const Cohomology& at_t1) {
  MatrixGF u = level_transition(at_t.layout);
  std::optional<MatrixGF> c = class_coords(at_t1, u * at_t.reps);
  if (!c) throw std::logic_error("transition image escapes the kernel basis");
  return *c;
}

GradedCohomologyWindow::GradedCohomologyWindow(
    std::shared_ptr<KoszulEngine> engine, int index, int lo, int hi, int t_max)
    : engine_(std::move(engine)), index_(index), lo_(lo), hi_(hi),
      t_rep_(t_max - 2), t_max_(t_max) {}

const DegreeReport& GradedCohomologyWindow::report(int n) const {
  auto it = reports_.find(n);
  if (it == reports_.end())
    throw std::invalid_argument("degree outside the computed window");
  return it->second;
}

const KoszulEngine::Cohomology& GradedCohomologyWindow::coh(int n) const {
  auto it = data_.find(n);
  if (it == data_.end())
    throw std::invalid_argument("degree outside the computed window");
  return it->second;
}

bool GradedCohomologyWindow::all_zero() const {
  for (const auto& [n, rep] : reports_)
    if (rep.dim != 0) return false;
  return true;
}

bool GradedCohomologyWindow::all_stabilized() const {
  for (const auto& [n, rep] : reports_)
    if (!rep.stabilized) return false;
  return true;
}

std::vector<Fraction> GradedCohomologyWindow::representative(int n,
                                                             int k) const {
  const KoszulEngine::Cohomology& h = coh(n);
  if (k < 0 || k >= h.dim)
    throw std::invalid_argument("class index out of range");
  const PolyRingPtr& ring = engine_->group().ring();
  std::vector<Fraction> out;
  for (std::size_t a = 0; a < h.layout.subsets.size(); ++a) {
    int adeg = h.layout.component_degrees[a];
    Polynomial num = Polynomial::zero(ring);
    if (adeg >= 0) {
      const InvariantSpace& sp = engine_->cache().get(adeg);
      if (sp.dim() > 0) {
        std::vector<FieldCode> coords(sp.dim());
        for (int r = 0; r < sp.dim(); ++r)
          coords[r] = h.reps.at(h.layout.offsets[a] + r, k);
        num = sp.from_coords(coords);
      }
    }
    const std::vector<int>& T = h.layout.subsets[a];
    out.emplace_back(num, engine_->subset_product(T),
                     T.empty() ? 0 : h.layout.truncation);
  }
  return out;
}

ClassVector GradedCohomologyWindow::multiply(
    const Polynomial& f, int n, std::span<const FieldCode> coords) const {
  if (!f.ring()->same_ring(*engine_->group().ring()))
    throw std::invalid_argument("multiplier from a different ring");
  if (f.is_zero() || !f.is_homogeneous())
    throw std::invalid_argument("multiplier must be homogeneous and nonzero");
  if (!is_invariant(engine_->group(), f))
    throw std::invalid_argument("multiplier must be invariant");
  if (!in_window(n)) return {ClassOpStatus::outside_window, n, {}};
  if (static_cast<int>(coords.size()) != dim(n))
    throw std::invalid_argument("class coordinate size mismatch");
  int m = n + f.total_degree();
  if (!in_window(m)) return {ClassOpStatus::outside_window, m, {}};
  if (!stabilized(n) || !stabilized(m))
    return {ClassOpStatus::not_stabilized, m, {}};
  const KoszulEngine::Cohomology& hs = coh(n);
  const KoszulEngine::Cohomology& ht = coh(m);
  const FieldSpecPtr& F = f.ring()->field();
  std::vector<FieldCode> lvl =
      hs.reps.apply(std::vector<FieldCode>(coords.begin(), coords.end()));
  MatrixGF v(F, ht.layout.total, 1);
  for (std::size_t a = 0; a < hs.layout.subsets.size(); ++a) {
    int sdeg = hs.layout.component_degrees[a];
    if (sdeg < 0) continue;
    const InvariantSpace& src = engine_->cache().get(sdeg);
    if (src.dim() == 0) continue;
    std::vector<FieldCode> part(lvl.begin() + hs.layout.offsets[a],
                                lvl.begin() + hs.layout.offsets[a] + src.dim());
    Polynomial prod = src.from_coords(part) * f;
    if (prod.is_zero()) continue;
    const InvariantSpace& dst =
        engine_->cache().get(ht.layout.component_degrees[a]);
    std::vector<FieldCode> tc = dst.coords_of(prod);
    for (int r = 0; r < dst.dim(); ++r)
      v.set(ht.layout.offsets[a] + r, 0, tc[r]);
  }
  std::optional<MatrixGF> cc = engine_->class_coords(ht, v);
  if (!cc) return {ClassOpStatus::not_representable, m, {}};
  return {ClassOpStatus::ok, m, cc->column(0)};
}

ClassVector GradedCohomologyWindow::induced_q(
    int r, int n, std::span<const FieldCode> coords) const {
  if (r < 0) throw std::invalid_argument("negative operation index");
  if (!in_window(n)) return {ClassOpStatus::outside_window, n, {}};
  if (static_cast<int>(coords.size()) != dim(n))
    throw std::invalid_argument("class coordinate size mismatch");
  const PolyRingPtr& ring = engine_->group().ring();
  const FieldSpecPtr& F = ring->field();
  int q = static_cast<int>(F->q());
  int m = n + r * (q - 1);
  if (!in_window(m)) return {ClassOpStatus::outside_window, m, {}};
  if (!stabilized(n) || !stabilized(m))
    return {ClassOpStatus::not_stabilized, m, {}};
  const KoszulEngine::Cohomology& hs = coh(n);
  const KoszulEngine::Cohomology& ht = coh(m);
  std::vector<FieldCode> lvl =
      hs.reps.apply(std::vector<FieldCode>(coords.begin(), coords.end()));
  std::vector<Fraction> images;
  int t_target = t_rep_;
  for (std::size_t a = 0; a < hs.layout.subsets.size(); ++a) {
    int sdeg = hs.layout.component_degrees[a];
    const std::vector<int>& T = hs.layout.subsets[a];
    Polynomial num = Polynomial::zero(ring);
    if (sdeg >= 0) {
      const InvariantSpace& src = engine_->cache().get(sdeg);
      if (src.dim() > 0) {
        std::vector<FieldCode> part(
            lvl.begin() + hs.layout.offsets[a],
            lvl.begin() + hs.layout.offsets[a] + src.dim());
        num = src.from_coords(part);
      }
    }
    Fraction u(num, engine_->subset_product(T),
               T.empty() ? 0 : hs.layout.truncation);
    Fraction qu = q_r(r, u);
    t_target = std::max(t_target, qu.exp());
    images.push_back(std::move(qu));
  }
  KoszulEngine::Layout lay = engine_->layout(index_, t_target, m);
  MatrixGF v(F, lay.total, 1);
  for (std::size_t a = 0; a < lay.subsets.size(); ++a) {
    const Fraction& qu = images[a];
    if (qu.is_zero()) continue;
    Polynomial pushed =
        qu.num() * qu.base().pow(static_cast<unsigned>(t_target - qu.exp()));
    const InvariantSpace& dst = engine_->cache().get(lay.component_degrees[a]);
    std::vector<FieldCode> tc = dst.coords_of(pushed);
    for (int rr = 0; rr < dst.dim(); ++rr)
      v.set(lay.offsets[a] + rr, 0, tc[rr]);
  }
  if (t_target == t_rep_) {
    std::optional<MatrixGF> cc = engine_->class_coords(ht, v);
    if (!cc) return {ClassOpStatus::not_representable, m, {}};
    return {ClassOpStatus::ok, m, cc->column(0)};
  }
  KoszulEngine::Cohomology hh = engine_->cohomology(index_, t_target, m);
  if (!(hh.d_out * v).is_zero())
    throw std::logic_error("induced operation produced a non-cocycle");
  MatrixGF pushed_reps = ht.reps;
  for (int t = t_rep_; t < t_target; ++t) {
    KoszulEngine::Layout step = engine_->layout(index_, t, m);
    pushed_reps = engine_->level_transition(step) * pushed_reps;
  }
  MatrixGF basis = pushed_reps.augmented(hh.image);
  if (basis.rank() != pushed_reps.cols() + hh.image.cols())
    return {ClassOpStatus::not_representable, m, {}};
  std::optional<MatrixGF> sol = basis.solve(v);
  if (!sol) return {ClassOpStatus::not_representable, m, {}};
  std::vector<FieldCode> out(ht.dim);
  for (int rr = 0; rr < ht.dim; ++rr) out[rr] = sol->at(rr, 0);
  return {ClassOpStatus::ok, m, std::move(out)};
}

GradedCohomologyWindow colimit_window(std::shared_ptr<KoszulEngine> engine,
                                      int index, int lo, int hi, int t_max) {
  if (!engine) throw std::invalid_argument("missing engine");
  if (index < 0) throw std::invalid_argument("negative cohomological index");
  if (lo > hi) throw std::invalid_argument("empty degree window");
  if (t_max < 3)
    throw std::invalid_argument("t_max must be at least 3 to witness stability");
  GradedCohomologyWindow w(engine, index, lo, hi, t_max);
  int t_rep = t_max - 2;
  int count = hi - lo + 1;
  std::vector<std::optional<DegreeReport>> reports(count);
  std::vector<std::optional<KoszulEngine::Cohomology>> data(count);
  parallel_for(count, [&](int idx) {
    int n = lo + idx;
    DegreeReport rep;
    KoszulEngine::Cohomology prev = engine->cohomology(index, 1, n);
    rep.dim_history.push_back(prev.dim);
    std::optional<KoszulEngine::Cohomology> at_rep;
    if (t_rep == 1) at_rep = prev;
    bool iso_a = false, iso_b = false;
    for (int t = 2; t <= t_max; ++t) {
      KoszulEngine::Cohomology cur = engine->cohomology(index, t, n);
      rep.dim_history.push_back(cur.dim);
      MatrixGF tr = engine->transition(prev, cur);
      bool iso = prev.dim == cur.dim && tr.rank() == cur.dim;
      if (t == t_rep + 1) iso_a = iso;
      if (t == t_rep + 2) iso_b = iso;
      prev = std::move(cur);
      if (t == t_rep) at_rep = prev;
    }
    rep.stabilized = iso_a && iso_b;
    rep.dim = at_rep->dim;
    reports[idx] = std::move(rep);
    data[idx] = std::move(*at_rep);
  });
  for (int idx = 0; idx < count; ++idx) {
    w.reports_.emplace(lo + idx, std::move(*reports[idx]));
    w.data_.emplace(lo + idx, std::move(*data[idx]));
  }
  return w;
}

WindowComparison compare_windows(const GradedCohomologyWindow& a,
                                 const GradedCohomologyWindow& b) {
  if (a.index() != b.index() || a.lo() != b.lo() || a.hi() != b.hi())
    throw std::invalid_argument("windows cover different ranges");
  WindowComparison cmp;
  for (int n = a.lo(); n <= a.hi(); ++n) {
    if (a.dim(n) != b.dim(n) || a.stabilized(n) != b.stabilized(n)) {
      cmp.agree = false;
      cmp.differing_degrees.push_back(n);
    }
  }
  return cmp;
}

const WindowAnnihilator::Piece& WindowAnnihilator::piece(int e) const {
  auto it = pieces_.find(e);
  if (it == pieces_.end())
    throw std::invalid_argument("degree beyond the annihilator cap");
  return it->second;
}

bool WindowAnnihilator::trivial() const {
  if (window_all_zero_) return false;
  for (const auto& [e, p] : pieces_)
    if (p.coords.cols() != 0) return false;
  return true;
}

bool WindowAnnihilator::contains(const Polynomial& f) const {
  if (f.is_zero()) return true;
  if (!f.is_homogeneous())
    throw std::invalid_argument("containment test needs homogeneous input");
  const Piece& p = piece(f.total_degree());
  const InvariantSpace& sp =
      window_->engine()->cache().get(f.total_degree());
  std::vector<FieldCode> c = sp.coords_of(f);
  MatrixGF b(f.ring()->field(), sp.dim(), 1);
  for (int r = 0; r < sp.dim(); ++r) b.set(r, 0, c[r]);
  return p.coords.solve(b).has_value();
}

WindowAnnihilator window_annihilator(const GradedCohomologyWindow& window,
                                     int degree_cap) {
  if (degree_cap < 0) throw std::invalid_argument("negative degree cap");
  WindowAnnihilator ann;
  ann.window_ = &window;
  ann.degree_cap_ = degree_cap;
  ann.window_all_zero_ = window.all_zero();
  KoszulEngine& eng = *window.engine();
  const FieldSpecPtr& F = eng.group().ring()->field();
  for (int e = 0; e <= degree_cap; ++e) {
    const InvariantSpace& se = eng.cache().get(e);
    WindowAnnihilator::Piece piece{e,           se.dim(), MatrixGF(F, 0, 0),
                                   {},          0,        {}};
    if (se.dim() == 0) {
      ann.pieces_.emplace(e, std::move(piece));
      continue;
    }
    std::vector<int> usable;
    for (int n = window.lo(); n <= window.hi(); ++n) {
      if (window.dim(n) == 0) continue;
      int m = n + e;
      if (!window.in_window(m)) {
        piece.skipped.push_back({n, e, ClassOpStatus::outside_window});
        continue;
      }
      if (!window.stabilized(n) || !window.stabilized(m)) {
        piece.skipped.push_back({n, e, ClassOpStatus::not_stabilized});
        continue;
      }
      if (window.dim(m) == 0) continue;
      usable.push_back(n);
    }
    int rows = 0;
    for (int n : usable) rows += window.dim(n) * window.dim(n + e);
    MatrixGF a(F, rows, se.dim());
    for (int l = 0; l < se.dim(); ++l) {
      int row = 0;
      for (int n : usable) {
        for (int k = 0; k < window.dim(n); ++k) {
          std::vector<FieldCode> unit(window.dim(n), F->zero());
          unit[k] = F->one();
          ClassVector cv = window.multiply(se.basis[l], n, unit);
          if (cv.status != ClassOpStatus::ok)
            throw std::logic_error("annihilator constraint unexpectedly failed");
          for (int rr = 0; rr < window.dim(n + e); ++rr)
            a.set(row + rr, l, cv.coords[rr]);
          row += window.dim(n + e);
        }
      }
    }
    piece.constraints = rows;
    piece.coords = a.kernel_basis();
    for (int c = 0; c < piece.coords.cols(); ++c) {
      std::vector<FieldCode> col = piece.coords.column(c);
      piece.basis.push_back(se.from_coords(col));
    }
    ann.pieces_.emplace(e, std::move(piece));
  }
  return ann;
}

ClosureReport pstar_closure_check(const WindowAnnihilator& ann) {
  ClosureReport report;
  const GradedCohomologyWindow& w = ann.window();
  int q = static_cast<int>(w.engine()->group().ring()->field()->q());
  for (int e = 0; e <= ann.degree_cap(); ++e) {
    const WindowAnnihilator::Piece& piece = ann.piece(e);
    for (std::size_t bi = 0; bi < piece.basis.size(); ++bi) {
      for (int i = 1; i <= e; ++i) {
        int target = e + i * (q - 1);
        if (target > ann.degree_cap()) {
          ++report.skipped;
          continue;
        }
        Polynomial pif = steenrod_power(static_cast<std::size_t>(i),
                                        piece.basis[bi]);
        ++report.checked;
        if (!ann.contains(pif)) {
          report.pass = false;
          report.violations.push_back({e, static_cast<int>(bi),
                                       static_cast<std::size_t>(i)});
        }
      }
    }
  }
  return report;
}

MultClosureReport invariant_closure_check(const WindowAnnihilator& ann) {
  MultClosureReport report;
  InvariantBasisCache& cache = ann.window().engine()->cache();
  for (int e = 0; e <= ann.degree_cap(); ++e) {
    const WindowAnnihilator::Piece& piece = ann.piece(e);
    for (std::size_t bi = 0; bi < piece.basis.size(); ++bi) {
      for (int c = 1; c + e <= ann.degree_cap(); ++c) {
        const InvariantSpace& sc = cache.get(c);
        for (int hi = 0; hi < sc.dim(); ++hi) {
          ++report.checked;
          if (!ann.contains(sc.basis[static_cast<std::size_t>(hi)] *
                            piece.basis[bi])) {
            report.pass = false;
            report.violations.push_back({e, static_cast<int>(bi), c, hi});
          }
        }
      }
    }
  }
  return report;
}

DicksonProbeReport dickson_containment_probe(const WindowAnnihilator& ann,
                                             const DicksonAlgebra& algebra,
                                             int g, int power_bound) {
  if (g < 1 || g > static_cast<int>(algebra.generators.size()))
    throw std::invalid_argument("generator count out of range");
  if (power_bound < 1) throw std::invalid_argument("power bound must be positive");
  if (!algebra.ring->same_ring(*ann.window().engine()->group().ring()))
    throw std::invalid_argument("algebra from a different ring");
  DicksonProbeReport report;
  if (ann.window_all_zero()) {
    report.status = ProbeStatus::vacuous_pass;
  } else if (ann.trivial()) {
    report.status = ProbeStatus::hypothesis_not_met;
    return report;
  } else {
    report.status = ProbeStatus::checked;
  }
  for (int j = 0; j < g; ++j) {
    GeneratorContainment gc;
    const Polynomial& gen = algebra.generators[j];
    int deg = gen.total_degree();
    bool capped = false;
    for (int e = 1; e <= power_bound; ++e) {
      if (deg * e > ann.degree_cap()) {
        capped = true;
        break;
      }
      if (ann.contains(gen.pow(static_cast<unsigned>(e)))) {
        gc.status = ContainmentStatus::contained;
        gc.witness_power = e;
        break;
      }
    }
    if (gc.status != ContainmentStatus::contained)
      gc.status = capped ? ContainmentStatus::inconclusive
                         : ContainmentStatus::not_contained;
    report.generators.push_back(gc);
  }
  return report;
}

DepthReport depth_probe(const std::vector<Polynomial>& sequence,
                        InvariantBasisCache& cache, int degree_cap) {
  const Group& G = cache.group();
  const FieldSpecPtr& F = G.ring()->field();
  for (const auto& f : sequence) {
    if (!f.ring()->same_ring(*G.ring()))
      throw std::invalid_argument("sequence entry from a different ring");
    if (f.is_zero() || !f.is_homogeneous() || f.total_degree() < 1)
      throw std::invalid_argument(
          "sequence entries must be homogeneous of positive degree");
    if (!is_invariant(G, f))
      throw std::invalid_argument("sequence entries must be invariant");
  }
  DepthReport report;
  for (std::size_t k = 0; k < sequence.size(); ++k) {
    DepthStep step;
    int delta = sequence[k].total_degree();
    step.tested_up_to = degree_cap - delta;
    for (int n = 0; n <= degree_cap - delta; ++n) {
      const InvariantSpace& sn = cache.get(n);
      const InvariantSpace& sm = cache.get(n + delta);
      if (sn.dim() == 0) continue;
      // Columns spanning the ideal pieces I_n and I_{n + delta}.
      auto ideal_columns = [&](int deg, const InvariantSpace& space) {
        std::vector<std::vector<FieldCode>> cols;
        for (std::size_t j = 0; j < k; ++j) {
          int rem = deg - sequence[j].total_degree();
          if (rem < 0) continue;
          for (const auto& h : cache.get(rem).basis)
            cols.push_back(space.coords_of(h * sequence[j]));
        }
        return MatrixGF::from_columns(F, space.dim(), cols);
      };
      MatrixGF in = ideal_columns(n, sn);
      MatrixGF im = ideal_columns(n + delta, sm);
      std::vector<std::vector<FieldCode>> mult_cols;
      for (const auto& b : sn.basis)
        mult_cols.push_back(sm.coords_of(b * sequence[k]));
      MatrixGF mult = MatrixGF::from_columns(F, sm.dim(), mult_cols);
      // v with f*v in I_{n+delta} arises from kernel vectors of [mult | im].
      MatrixGF stacked = mult.augmented(im);
      MatrixGF ker = stacked.kernel_basis();
      MatrixGF proj(F, sn.dim(), ker.cols());
      for (int r = 0; r < sn.dim(); ++r)
        for (int c = 0; c < ker.cols(); ++c) proj.set(r, c, ker.at(r, c));
      MatrixGF aug = in.augmented(proj);
      std::vector<int> ind = aug.independent_columns();
      std::optional<int> witness_col;
      for (int c : ind)
        if (c >= in.cols()) {
          witness_col = c - in.cols();
          break;
        }
      if (witness_col) {
        step.regular = false;
        step.violation_degree = n;
        step.witness = sn.from_coords(proj.column(*witness_col));
        report.regular = false;
        break;
      }
    }
    report.steps.push_back(std::move(step));
  }
  return report;
}

}  // namespace modinv
