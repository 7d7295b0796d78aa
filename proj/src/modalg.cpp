#include "frobkern/modalg.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace fk {

namespace {

std::vector<elem> column_of(const FpMatrix& m, std::size_t j) {
  std::vector<elem> v(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) v[i] = m(i, j);
  return v;
}

// Submodule spanned by the columns of b, where b restricted to the rows
// `pivots` is the identity; coordinates are read off at those rows.
Submodule submodule_from_pivots(const FpModule& m, FpMatrix b, const std::vector<std::size_t>& pivots) {
  const Field& f = m.field();
  const std::size_t k = b.cols();
  std::vector<FpMatrix> acts;
  std::mt19937_64 rng(0x5eed);
  for (std::size_t a = 0; a < m.generator_count(); ++a) {
    FpMatrix img = m.action(a) * b;
    FpMatrix c(f, k, k);
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t i = 0; i < k; ++i) c(j, i) = img(pivots[j], i);
    // randomized invariance check: rho(a) B z == B (C z)
    for (int t = 0; t < 2 && k > 0; ++t) {
      FpMatrix z = FpMatrix::random(f, k, 1, rng);
      if (img * z != b * (c * z)) throw std::invalid_argument("subspace is not invariant under " + m.schema().labels[a]);
    }
    acts.push_back(std::move(c));
  }
  if (k == 0) return {FpModule::zero(m.schema_ptr(), f), FpMatrix(f, m.dim(), 0)};
  return {FpModule(m.schema_ptr(), f, std::move(acts), false), std::move(b)};
}

// Reduced echelon basis of the column span, ordered by pivot.
std::pair<FpMatrix, std::vector<std::size_t>> echelon_columns(const FpMatrix& columns) {
  const Field& f = columns.field();
  EchelonBasis eb(f, columns.rows());
  for (std::size_t j = 0; j < columns.cols(); ++j) eb.insert(column_of(columns, j));
  std::vector<std::size_t> order(eb.dim());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto x, auto y) { return eb.pivots()[x] < eb.pivots()[y]; });
  FpMatrix b(f, columns.rows(), eb.dim());
  std::vector<std::size_t> piv;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const auto& r = eb.rows()[order[k]];
    for (std::size_t i = 0; i < columns.rows(); ++i) b(i, k) = r[i];
    piv.push_back(eb.pivots()[order[k]]);
  }
  return {b, piv};
}

}  // namespace

Submodule submodule(const FpModule& m, const FpMatrix& columns) {
  if (columns.rows() != m.dim()) throw std::invalid_argument("subspace vectors have wrong length");
  if (columns.cols() == 0) return {FpModule::zero(m.schema_ptr(), m.field()), FpMatrix(m.field(), m.dim(), 0)};
  auto [b, piv] = echelon_columns(columns);
  return submodule_from_pivots(m, std::move(b), piv);
}

Submodule generated_submodule(const FpModule& m, const FpMatrix& columns) {
  const Field& f = m.field();
  EchelonBasis eb(f, m.dim());
  std::vector<std::vector<elem>> queue;
  for (std::size_t j = 0; j < columns.cols(); ++j) {
    auto v = column_of(columns, j);
    if (eb.insert(v)) queue.push_back(v);
  }
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (std::size_t a = 0; a < m.generator_count(); ++a) {
      auto y = m.action(a).apply(queue[k]);
      if (eb.insert(y)) queue.push_back(y);
    }
  return submodule(m, eb.as_columns());
}

Quotient quotient(const FpModule& m, const FpMatrix& sub_columns) {
  const Field& f = m.field();
  const std::size_t n = m.dim();
  FpMatrix b(f, n, 0);
  std::vector<std::size_t> piv;
  if (sub_columns.cols() > 0) std::tie(b, piv) = echelon_columns(sub_columns);
  std::vector<bool> is_piv(n, false);
  for (auto c : piv) is_piv[c] = true;
  Quotient q;
  for (std::size_t j = 0; j < n; ++j)
    if (!is_piv[j]) q.complement.push_back(j);
  const std::size_t d = q.complement.size();
  std::vector<std::size_t> pos(n, 0);
  for (std::size_t t = 0; t < d; ++t) pos[q.complement[t]] = t;
  q.projection = FpMatrix(f, d, n);
  for (std::size_t t = 0; t < d; ++t) q.projection(t, q.complement[t]) = 1;
  for (std::size_t i = 0; i < piv.size(); ++i)
    for (std::size_t t = 0; t < d; ++t) q.projection(t, piv[i]) = f.neg(b(q.complement[t], i));
  if (d == 0) {
    q.module = FpModule::zero(m.schema_ptr(), f);
    return q;
  }
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), 0);
  std::vector<FpMatrix> acts;
  for (std::size_t a = 0; a < m.generator_count(); ++a)
    acts.push_back(q.projection * m.action(a).submatrix(all, q.complement));
  q.module = FpModule(m.schema_ptr(), f, std::move(acts), false);
  return q;
}

Submodule kernel(const FpModule& m, const FpMatrix& hom) {
  if (hom.cols() != m.dim()) throw std::invalid_argument("hom has wrong source dimension");
  FpMatrix t(hom);
  auto piv = t.rref_in_place();
  std::vector<bool> is_piv(m.dim(), false);
  for (auto c : piv) is_piv[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < m.dim(); ++c)
    if (!is_piv[c]) free.push_back(c);
  const Field& f = m.field();
  FpMatrix b(f, m.dim(), free.size());
  for (std::size_t k = 0; k < free.size(); ++k) {
    b(free[k], k) = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) b(piv[i], k) = f.neg(t(i, free[k]));
  }
  if (free.empty()) return {FpModule::zero(m.schema_ptr(), f), FpMatrix(f, m.dim(), 0)};
  return submodule_from_pivots(m, std::move(b), free);
}

FpModule direct_sum(const FpModule& a, const FpModule& b) {
  require_compatible(a, b);
  if (a.dim() == 0) return b;
  if (b.dim() == 0) return a;
  std::vector<FpMatrix> acts;
  for (std::size_t g = 0; g < a.generator_count(); ++g) acts.push_back(block_diag(a.action(g), b.action(g)));
  return FpModule(a.schema_ptr(), a.field(), std::move(acts), false);
}

TopInfo radical_and_top(const FpModule& m, const std::vector<FpModule>& simples, std::uint64_t seed) {
  TopInfo info;
  const Field& f = m.field();
  if (simples.empty()) {
    info.no_simples = true;
    info.radical = {m, FpMatrix::identity(f, m.dim())};
    return info;
  }
  HomSolver solver(m, seed);
  std::vector<FpMatrix> homs;
  for (auto& s : simples) {
    auto basis = solver.basis(s);
    info.multiplicities.push_back(basis.size());
    for (auto& h : basis) homs.push_back(std::move(h));
  }
  if (homs.empty()) {
    info.radical = {m, FpMatrix::identity(f, m.dim())};
    return info;
  }
  info.radical = kernel(m, vstack(homs));
  return info;
}

Submodule socle(const FpModule& m, const std::vector<FpModule>& simples, std::uint64_t seed) {
  std::vector<FpMatrix> images;
  for (auto& s : simples)
    for (auto& h : HomSolver(s, seed).basis(m)) images.push_back(h);
  if (images.empty()) return {FpModule::zero(m.schema_ptr(), m.field()), FpMatrix(m.field(), m.dim(), 0)};
  return submodule(m, hstack(images));
}

Presentation make_presentation(const FpModule& p, const FpMatrix& pi) {
  if (pi.cols() != p.dim()) throw std::invalid_argument("presentation map has wrong source dimension");
  if (pi.rank() != pi.rows()) throw std::invalid_argument("presentation map is not surjective");
  Presentation pres;
  pres.p = p;
  pres.pi = pi;
  pres.k = kernel(p, pi);
  return pres;
}

void validate_projectives(const std::vector<ProjectiveEntry>& projectives) {
  for (std::size_t i = 0; i < projectives.size(); ++i) {
    HomSolver solver(projectives[i].projective);
    for (std::size_t j = 0; j < projectives.size(); ++j) {
      auto d = solver.dimension(projectives[j].simple);
      if (d != (i == j ? 1u : 0u))
        throw std::invalid_argument("projective " + projectives[i].label + " does not have simple top " +
                                    projectives[i].label);
    }
  }
}

Presentation projective_cover(const FpModule& m, const std::vector<ProjectiveEntry>& projectives,
                              std::uint64_t seed) {
  const Field& f = m.field();
  if (projectives.empty()) throw MissingProjective("no projectives supplied");
  std::vector<FpModule> simples;
  for (auto& e : projectives) simples.push_back(e.simple);
  TopInfo top = radical_and_top(m, simples, seed);
  EchelonBasis span(f, m.dim());
  for (std::size_t j = 0; j < top.radical.inclusion.cols(); ++j) span.insert(column_of(top.radical.inclusion, j));
  std::vector<FpMatrix> maps;
  FpModule p = FpModule::zero(m.schema_ptr(), f);
  std::vector<std::size_t> summands;
  for (std::size_t i = 0; i < projectives.size(); ++i) {
    if (top.multiplicities[i] == 0) continue;
    std::size_t taken = 0;
    for (auto& phi : HomSolver(projectives[i].projective, seed).basis(m)) {
      if (taken == top.multiplicities[i]) break;
      bool grows = false;
      for (std::size_t j = 0; j < phi.cols() && !grows; ++j) {
        auto v = column_of(phi, j);
        grows = !span.reduce(v);
      }
      if (!grows) continue;
      for (std::size_t j = 0; j < phi.cols(); ++j) span.insert(column_of(phi, j));
      maps.push_back(phi);
      p = direct_sum(p, projectives[i].projective);
      summands.push_back(i);
      ++taken;
    }
  }
  if (span.dim() != m.dim()) throw MissingProjective("top of module not covered by the supplied projectives");
  FpMatrix pi = maps.empty() ? FpMatrix(f, m.dim(), 0) : hstack(maps);
  if (pi.rank() != m.dim()) throw MissingProjective("a simple quotient of the module has no supplied projective");
  Presentation pres = make_presentation(p, pi);
  pres.summands = std::move(summands);
  return pres;
}

FpModule syzygy(const FpModule& m, const std::vector<ProjectiveEntry>& projectives, std::uint64_t seed) {
  return projective_cover(m, projectives, seed).k.module;
}

Ext1Engine::Ext1Engine(Presentation pres, std::uint64_t seed)
    : pres_(std::move(pres)), k_solver_(pres_.k.module, seed), p_solver_(pres_.p, seed) {
  for (auto& s : k_solver_.seed_vectors()) k_seeds_in_p_.push_back(pres_.k.inclusion.apply(s));
}

Ext1Engine::Result Ext1Engine::compute(const FpModule& n, bool want_cocycles) const {
  Result res;
  const Field& f = n.field();
  auto ks = k_solver_.solve(n);
  if (ks.dim() == 0) return res;
  auto ps = p_solver_.solve(n);
  EchelonBasis image(f, ks.unknowns());
  for (auto& psi : ps.matrices()) {
    std::vector<std::vector<elem>> imgs;
    for (auto& v : k_seeds_in_p_) imgs.push_back(psi.apply(v));
    image.insert(ks.encode_images(imgs));
  }
  res.dim = ks.dim() - image.dim();
  if (want_cocycles) {
    for (std::size_t c = 0; c < ks.dim() && res.cocycles.size() < res.dim; ++c) {
      auto x = column_of(ks.basis(), c);
      if (image.insert(x)) res.cocycles.push_back(ks.to_matrix(x));
    }
  }
  return res;
}

std::size_t ext1_dim(const FpModule& m, const FpModule& n, const std::vector<ProjectiveEntry>& projectives,
                     std::uint64_t seed) {
  return Ext1Engine(projective_cover(m, projectives, seed), seed).dim(n);
}

Extension build_extension(const Presentation& pres, const FpModule& n, const FpMatrix& cocycle) {
  require_compatible(pres.p, n);
  const Field& f = n.field();
  const std::size_t dp = pres.p.dim(), dn = n.dim(), dk = pres.k.module.dim();
  if (cocycle.rows() != dn || cocycle.cols() != dk) throw std::invalid_argument("cocycle has wrong shape");
  if (!is_intertwiner(pres.k.module, n, cocycle)) throw std::invalid_argument("cocycle is not a homomorphism");
  FpModule sum = direct_sum(pres.p, n);
  FpMatrix d(f, dp + dn, dk);
  for (std::size_t j = 0; j < dk; ++j) {
    for (std::size_t i = 0; i < dp; ++i) d(i, j) = pres.k.inclusion(i, j);
    for (std::size_t i = 0; i < dn; ++i) d(dp + i, j) = f.neg(cocycle(i, j));
  }
  Quotient q = quotient(sum, d);
  Extension ext;
  ext.e = q.module;
  std::vector<std::size_t> rows(q.projection.rows()), ncols(dn);
  std::iota(rows.begin(), rows.end(), 0);
  std::iota(ncols.begin(), ncols.end(), dp);
  ext.incl = q.projection.submatrix(rows, ncols);
  FpMatrix to_m(f, pres.pi.rows(), dp + dn);
  for (std::size_t i = 0; i < pres.pi.rows(); ++i)
    for (std::size_t j = 0; j < dp; ++j) to_m(i, j) = pres.pi(i, j);
  std::vector<std::size_t> mrows(pres.pi.rows());
  std::iota(mrows.begin(), mrows.end(), 0);
  ext.proj = to_m.submatrix(mrows, q.complement);
  return ext;
}

Extension build_extension(const FpModule& m, const FpModule& n, const FpMatrix& cocycle,
                          const std::vector<ProjectiveEntry>& projectives, std::uint64_t seed) {
  return build_extension(projective_cover(m, projectives, seed), n, cocycle);
}

bool verify_isomorphism(const FpModule& m, const FpModule& n, const FpMatrix& w) {
  return m.dim() == n.dim() && is_intertwiner(m, n, w) && w.invertible();
}

IsoResult is_isomorphic(const FpModule& m, const FpModule& n, std::uint64_t seed, int retries,
                        std::size_t exhaustive_bound) {
  require_compatible(m, n);
  IsoResult res;
  const Field& f = m.field();
  if (m.dim() != n.dim()) {
    res.verdict = Verdict::No;
    res.detail = "dimensions differ";
    return res;
  }
  if (m.dim() == 0) {
    res.verdict = Verdict::Yes;
    res.witness = FpMatrix(f, 0, 0);
    return res;
  }
  auto basis = HomSolver(m, seed).basis(n);
  if (basis.empty()) {
    res.verdict = Verdict::No;
    res.detail = "no nonzero homomorphism";
    return res;
  }
  auto combo = [&](const std::vector<elem>& c) {
    FpMatrix w(f, n.dim(), m.dim());
    for (std::size_t j = 0; j < basis.size(); ++j)
      if (c[j])
        for (std::size_t i = 0; i < w.rows(); ++i) axpy(f, w.row(i), basis[j].row(i), c[j], w.cols());
    return w;
  };
  auto accept = [&](const FpMatrix& w) {
    if (!verify_isomorphism(m, n, w)) return false;
    res.verdict = Verdict::Yes;
    res.witness = w;
    return true;
  };
  for (auto& b : basis)
    if (accept(b)) return res;
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_int_distribution<int> dist(0, f.q() - 1);
  for (int t = 0; t < retries; ++t) {
    std::vector<elem> c(basis.size());
    for (auto& x : c) x = static_cast<elem>(dist(rng));
    if (accept(combo(c))) return res;
  }
  double total = 1;
  for (std::size_t i = 0; i < basis.size(); ++i) total *= f.q();
  if (total <= static_cast<double>(exhaustive_bound)) {
    std::vector<elem> c(basis.size());
    for (std::uint64_t code = 0; code < static_cast<std::uint64_t>(total); ++code) {
      std::uint64_t v = code;
      for (auto& x : c) {
        x = static_cast<elem>(v % f.q());
        v /= f.q();
      }
      if (accept(combo(c))) return res;
    }
    res.verdict = Verdict::No;
    res.detail = "exhaustive search over Hom found no invertible element";
    return res;
  }
  res.detail = "random search exhausted";
  return res;
}

IndecResult is_indecomposable(const FpModule& m, std::uint64_t seed) {
  if (m.dim() == 0) throw std::invalid_argument("zero module");
  IndecResult res;
  auto end = HomSolver(m, seed).basis(m);
  res.certificate = analyze_local(end, seed);
  res.verdict = res.certificate.local == Verdict::Yes  ? Verdict::Yes
                : res.certificate.local == Verdict::No ? Verdict::No
                                                       : Verdict::Undecided;
  if (res.verdict == Verdict::No) {
    const FpMatrix& e = *res.certificate.idempotent;
    if (!is_intertwiner(m, m, e) || e * e != e) res.verdict = Verdict::Undecided;
  }
  return res;
}

std::vector<Submodule> split_indecomposables(const FpModule& m, std::uint64_t seed) {
  auto res = is_indecomposable(m, seed);
  if (res.verdict == Verdict::Yes) return {{m, FpMatrix::identity(m.field(), m.dim())}};
  if (res.verdict == Verdict::Undecided) throw Undecided("indecomposability undecided: " + res.certificate.detail);
  const FpMatrix& e = *res.certificate.idempotent;
  FpMatrix comp = FpMatrix::identity(m.field(), m.dim()) - e;
  std::vector<Submodule> out;
  for (const FpMatrix* part : std::vector<const FpMatrix*>{&e, &comp}) {
    Submodule s = submodule(m, *part);
    for (auto& piece : split_indecomposables(s.module, seed + 1))
      out.push_back({piece.module, s.inclusion * piece.inclusion});
  }
  return out;
}

bool is_projective_module(const Presentation& pres, const std::vector<FpModule>& simples, std::uint64_t seed) {
  Ext1Engine engine(pres, seed);
  for (auto& s : simples)
    if (engine.dim(s) != 0) return false;
  return true;
}

bool is_projective_module(const FpModule& m, const std::vector<FpModule>& simples,
                          const std::vector<ProjectiveEntry>& projectives, std::uint64_t seed) {
  return is_projective_module(projective_cover(m, projectives, seed), simples, seed);
}

}  // namespace fk
