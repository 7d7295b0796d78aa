#include "frobkern/homs.hpp"

#include <optional>
#include <random>

namespace fk {

namespace {

Grading trivial_grading(std::size_t n) {
  Grading g;
  g.block_of.assign(n, 0);
  g.trivial = true;
  if (n > 0) {
    g.keys.push_back({});
    g.index.emplace(std::vector<elem>{}, 0);
    g.blocks.push_back({});
    for (std::size_t i = 0; i < n; ++i) g.blocks[0].push_back(i);
  }
  return g;
}

struct BlockArrow {
  std::size_t target;
  FpMatrix map;  // n_target x n_source
};

// For each generator and source block, the nonzero block components of its action.
std::vector<std::vector<std::vector<BlockArrow>>> block_arrows(const FpModule& m, const Grading& g) {
  std::vector<std::vector<std::vector<BlockArrow>>> out(m.generator_count());
  const std::size_t nb = g.blocks.size();
  for (std::size_t a = 0; a < m.generator_count(); ++a) {
    const FpMatrix& act = m.action(a);
    out[a].resize(nb);
    for (std::size_t b = 0; b < nb; ++b) {
      std::vector<bool> hit(nb, false);
      for (auto j : g.blocks[b])
        for (std::size_t i = 0; i < m.dim(); ++i)
          if (act(i, j)) hit[g.block_of[i]] = true;
      for (std::size_t t = 0; t < nb; ++t)
        if (hit[t]) out[a][b].push_back({t, act.submatrix(g.blocks[t], g.blocks[b])});
    }
  }
  return out;
}

bool is_diagonal(const FpMatrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j && a(i, j)) return false;
  return true;
}

}  // namespace

struct HomSolver::Plan {
  FpModule m;
  Grading g;
  struct Part {
    std::size_t block;
    bool fresh;
    std::size_t index;  // spun index when fresh
    std::vector<std::pair<std::size_t, elem>> coords;
  };
  struct Event {
    std::size_t k, gen;
    std::vector<Part> parts;
  };
  std::vector<std::size_t> spun_block;
  std::vector<std::vector<elem>> spun_vec;
  std::vector<std::size_t> seeds;
  std::vector<Event> events;
  std::vector<std::vector<std::size_t>> block_spun;
  std::vector<FpMatrix> binv;
};

struct HomSolver::Space::Impl {
  std::shared_ptr<const Plan> plan;
  const Field* f = nullptr;
  std::size_t target_dim = 0;
  std::vector<std::vector<std::size_t>> target_rows;  // per source block: target indices
  std::vector<std::size_t> seed_offset;
  std::size_t unknowns = 0;
  std::vector<FpMatrix> c;  // per spun vector: n_target_block x unknowns
};

HomSolver::HomSolver(const FpModule& source, std::uint64_t seed, bool force_ungraded) : seed_(seed) {
  auto plan = std::make_shared<Plan>();
  plan->m = source;
  plan->g = force_ungraded ? trivial_grading(source.dim()) : source.grading();
  const Field& f = source.field();
  const Grading& g = plan->g;
  const std::size_t nb = g.blocks.size();
  auto arrows = block_arrows(source, g);

  // Blocks not covered by the images of the non-diagonal generators must host seeds.
  std::vector<std::size_t> priority, rest;
  for (std::size_t b = 0; b < nb; ++b) {
    EchelonBasis img(f, g.blocks[b].size());
    for (std::size_t a = 0; a < source.generator_count(); ++a) {
      if (is_diagonal(source.action(a))) continue;
      for (std::size_t s = 0; s < nb; ++s)
        for (auto& arr : arrows[a][s]) {
          if (arr.target != b) continue;
          for (std::size_t j = 0; j < arr.map.cols() && img.dim() < img.ambient(); ++j) {
            std::vector<elem> col(arr.map.rows());
            for (std::size_t i = 0; i < arr.map.rows(); ++i) col[i] = arr.map(i, j);
            img.insert(col);
          }
        }
    }
    (img.dim() < g.blocks[b].size() ? priority : rest).push_back(b);
  }
  priority.insert(priority.end(), rest.begin(), rest.end());

  std::vector<TrackedEchelon> ech;
  for (std::size_t b = 0; b < nb; ++b) ech.emplace_back(f, g.blocks[b].size());
  plan->block_spun.assign(nb, {});
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(0, f.q() - 1);

  auto add_spun = [&](std::size_t b, std::vector<elem> v) {
    plan->spun_block.push_back(b);
    plan->spun_vec.push_back(std::move(v));
    plan->block_spun[b].push_back(plan->spun_vec.size() - 1);
    return plan->spun_vec.size() - 1;
  };

  std::size_t processed = 0;
  while (true) {
    while (processed < plan->spun_vec.size()) {
      const std::size_t k = processed++;
      const std::size_t b = plan->spun_block[k];
      for (std::size_t a = 0; a < source.generator_count(); ++a) {
        Plan::Event ev{k, a, {}};
        for (auto& arr : arrows[a][b]) {
          std::vector<elem> y = arr.map.apply(plan->spun_vec[k]);
          bool zero = true;
          for (elem x : y)
            if (x) {
              zero = false;
              break;
            }
          if (zero) continue;
          auto expr = ech[arr.target].add_or_express(y);
          Plan::Part part{arr.target, !expr.has_value(), 0, {}};
          if (part.fresh) {
            part.index = add_spun(arr.target, std::move(y));
          } else {
            const auto& local = plan->block_spun[arr.target];
            for (std::size_t j = 0; j < local.size(); ++j)
              if ((*expr)[j]) part.coords.emplace_back(local[j], (*expr)[j]);
          }
          ev.parts.push_back(std::move(part));
        }
        plan->events.push_back(std::move(ev));
      }
    }
    if (plan->spun_vec.size() == source.dim()) break;
    std::size_t b = nb;
    for (auto cand : priority)
      if (ech[cand].dim() < g.blocks[cand].size()) {
        b = cand;
        break;
      }
    std::vector<elem> v(g.blocks[b].size());
    do {
      for (auto& x : v) x = static_cast<elem>(dist(rng));
    } while (!ech[b].independent(v));
    ech[b].add_or_express(v);
    plan->seeds.push_back(add_spun(b, std::move(v)));
  }

  for (std::size_t b = 0; b < nb; ++b) {
    const std::size_t n = g.blocks[b].size();
    FpMatrix basis(f, n, n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) basis(i, j) = plan->spun_vec[plan->block_spun[b][j]][i];
    plan->binv.push_back(basis.inverse());
  }
  plan_ = std::move(plan);
}

const FpModule& HomSolver::source() const { return plan_->m; }

std::vector<std::vector<elem>> HomSolver::seed_vectors() const {
  std::vector<std::vector<elem>> out;
  for (auto k : plan_->seeds) {
    std::vector<elem> v(plan_->m.dim(), 0);
    const auto& idx = plan_->g.blocks[plan_->spun_block[k]];
    for (std::size_t i = 0; i < idx.size(); ++i) v[idx[i]] = plan_->spun_vec[k][i];
    out.push_back(std::move(v));
  }
  return out;
}

HomSolver::Space HomSolver::solve(const FpModule& target) const {
  require_compatible(plan_->m, target);
  const Plan& plan = *plan_;
  const Field& f = plan.m.field();
  Grading tg = plan.g.trivial ? trivial_grading(target.dim()) : target.grading();
  if (!plan.g.trivial && tg.trivial) return HomSolver(plan.m, seed_, true).solve(target);

  auto impl = std::make_shared<Space::Impl>();
  impl->plan = plan_;
  impl->f = &f;
  impl->target_dim = target.dim();
  const std::size_t nb = plan.g.blocks.size();
  std::vector<std::optional<std::size_t>> tblock(nb);
  impl->target_rows.assign(nb, {});
  for (std::size_t b = 0; b < nb; ++b) {
    tblock[b] = tg.find(plan.g.keys[b]);
    if (tblock[b]) impl->target_rows[b] = tg.blocks[*tblock[b]];
  }
  auto tsize = [&](std::size_t b) { return impl->target_rows[b].size(); };
  for (auto k : plan.seeds) {
    impl->seed_offset.push_back(impl->unknowns);
    impl->unknowns += tsize(plan.spun_block[k]);
  }
  const std::size_t u = impl->unknowns;
  impl->c.assign(plan.spun_vec.size(), FpMatrix());
  for (std::size_t s = 0; s < plan.seeds.size(); ++s) {
    const std::size_t k = plan.seeds[s];
    FpMatrix c(f, tsize(plan.spun_block[k]), u);
    for (std::size_t i = 0; i < c.rows(); ++i) c(i, impl->seed_offset[s] + i) = 1;
    impl->c[k] = std::move(c);
  }

  auto tarrows = block_arrows(target, tg);
  EchelonBasis eq(f, u);
  auto add_rows = [&](const FpMatrix& m) {
    for (std::size_t i = 0; i < m.rows() && eq.dim() < u; ++i) {
      std::vector<elem> row(m.row(i), m.row(i) + u);
      eq.insert(std::move(row));
    }
  };

  for (const auto& ev : plan.events) {
    const std::size_t b = plan.spun_block[ev.k];
    std::vector<std::pair<std::size_t, FpMatrix>> ys;  // keyed by target block
    if (tblock[b] && tsize(b) > 0)
      for (auto& arr : tarrows[ev.gen][*tblock[b]]) ys.emplace_back(arr.target, arr.map * impl->c[ev.k]);
    std::vector<bool> matched(ys.size(), false);
    for (const auto& part : ev.parts) {
      const std::size_t t = part.block;
      const FpMatrix* y = nullptr;
      if (tblock[t])
        for (std::size_t i = 0; i < ys.size(); ++i)
          if (ys[i].first == *tblock[t]) {
            y = &ys[i].second;
            matched[i] = true;
          }
      if (part.fresh) {
        impl->c[part.index] = y ? *y : FpMatrix(f, tsize(t), u);
      } else if (tsize(t) > 0) {
        FpMatrix lhs = y ? *y : FpMatrix(f, tsize(t), u);
        for (auto& [m, c] : part.coords)
          for (std::size_t i = 0; i < lhs.rows(); ++i)
            axpy(f, lhs.row(i), impl->c[m].row(i), f.neg(c), u);
        add_rows(lhs);
      }
    }
    for (std::size_t i = 0; i < ys.size(); ++i)
      if (!matched[i]) add_rows(ys[i].second);
  }

  FpMatrix e(f, eq.dim(), u);
  for (std::size_t i = 0; i < eq.dim(); ++i)
    for (std::size_t j = 0; j < u; ++j) e(i, j) = eq.rows()[i][j];
  Space sp;
  sp.basis_ = e.nullspace();
  sp.impl_ = std::move(impl);
  return sp;
}

FpMatrix HomSolver::Space::to_matrix(const std::vector<elem>& x) const {
  const Impl& im = *impl_;
  const Plan& plan = *im.plan;
  const Field& f = *im.f;
  if (x.size() != im.unknowns) throw std::invalid_argument("seed-image vector has wrong length");
  FpMatrix h(f, im.target_dim, plan.m.dim());
  for (std::size_t b = 0; b < plan.g.blocks.size(); ++b) {
    const auto& rows = im.target_rows[b];
    const auto& cols = plan.g.blocks[b];
    if (rows.empty()) continue;
    FpMatrix y(f, rows.size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      auto v = im.c[plan.block_spun[b][j]].apply(x);
      for (std::size_t i = 0; i < rows.size(); ++i) y(i, j) = v[i];
    }
    FpMatrix phi = y * plan.binv[b];
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) h(rows[i], cols[j]) = phi(i, j);
  }
  return h;
}

std::vector<FpMatrix> HomSolver::Space::matrices() const {
  std::vector<FpMatrix> out;
  for (std::size_t k = 0; k < basis_.cols(); ++k) {
    std::vector<elem> x(basis_.rows());
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = basis_(i, k);
    out.push_back(to_matrix(x));
  }
  return out;
}

std::vector<elem> HomSolver::Space::encode(const FpMatrix& hom) const {
  const Impl& im = *impl_;
  const Plan& plan = *im.plan;
  std::vector<elem> x(im.unknowns, 0);
  for (std::size_t s = 0; s < plan.seeds.size(); ++s) {
    const std::size_t k = plan.seeds[s];
    const std::size_t b = plan.spun_block[k];
    const auto& cols = plan.g.blocks[b];
    const auto& rows = im.target_rows[b];
    for (std::size_t i = 0; i < rows.size(); ++i) {
      elem acc = 0;
      for (std::size_t j = 0; j < cols.size(); ++j)
        if (plan.spun_vec[k][j]) acc = im.f->add(acc, im.f->mul(hom(rows[i], cols[j]), plan.spun_vec[k][j]));
      x[im.seed_offset[s] + i] = acc;
    }
  }
  return x;
}

std::vector<elem> HomSolver::Space::encode_images(const std::vector<std::vector<elem>>& images) const {
  const Impl& im = *impl_;
  const Plan& plan = *im.plan;
  if (images.size() != plan.seeds.size()) throw std::invalid_argument("one image per seed expected");
  std::vector<elem> x(im.unknowns, 0);
  for (std::size_t s = 0; s < plan.seeds.size(); ++s) {
    const auto& rows = im.target_rows[plan.spun_block[plan.seeds[s]]];
    for (std::size_t i = 0; i < rows.size(); ++i) x[im.seed_offset[s] + i] = images[s][rows[i]];
  }
  return x;
}

std::vector<FpMatrix> hom_space(const FpModule& m, const FpModule& n, std::uint64_t seed) {
  auto basis = HomSolver(m, seed).basis(n);
  for (auto& h : basis)
    if (!is_intertwiner(m, n, h)) throw std::logic_error("hom_space produced a non-intertwiner");
  return basis;
}

}  // namespace fk
