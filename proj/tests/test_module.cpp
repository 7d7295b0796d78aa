#include <random>

#include "doctest.h"
#include "frobkern/homs.hpp"
#include "frobkern/modalg.hpp"
#include "frobkern/sl2.hpp"

using namespace fk;

namespace {

// dim Hom(M, N) from the dense linear system H A_g = B_g H over all generators.
std::size_t hom_dim_oracle(const FpModule& m, const FpModule& n) {
  const Field& f = m.field();
  const std::size_t a = m.dim(), b = n.dim();
  FpMatrix sys(f, m.generator_count() * a * b, a * b);
  std::size_t row = 0;
  for (std::size_t g = 0; g < m.generator_count(); ++g) {
    const FpMatrix &A = m.action(g), &B = n.action(g);
    for (std::size_t i = 0; i < b; ++i)
      for (std::size_t k = 0; k < a; ++k, ++row) {
        for (std::size_t j = 0; j < a; ++j) sys(row, i * a + j) = f.add(sys(row, i * a + j), A(j, k));
        for (std::size_t l = 0; l < b; ++l) sys(row, l * a + k) = f.sub(sys(row, l * a + k), B(i, l));
      }
  }
  return a * b - sys.rank();
}

FpMatrix random_invertible(const Field& f, std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    auto s = FpMatrix::random(f, n, n, rng);
    if (s.invertible()) return s;
  }
}

FpModule conjugate(const FpModule& m, const FpMatrix& s) {
  FpMatrix si = s.inverse();
  std::vector<FpMatrix> acts;
  for (auto& a : m.actions()) acts.push_back(s * a * si);
  return FpModule(m.schema_ptr(), m.field(), std::move(acts));
}

std::vector<FpModule> corpus(int p, std::mt19937_64& rng) {
  std::vector<FpModule> out;
  for (int m = 0; m < p; ++m) out.push_back(sl2::build_simple(m, p));
  for (int l = 0; l < p; ++l) out.push_back(sl2::build_verma_r1(l, p));
  out.push_back(sl2::tensor(sl2::steinberg(p, 1), sl2::build_simple(1, p)));
  out.push_back(direct_sum(sl2::build_verma_r1(0, p), sl2::build_simple(p - 2, p)));
  auto z = sl2::build_verma_r1(1, p);
  out.push_back(conjugate(z, random_invertible(z.field(), z.dim(), rng)));
  return out;
}

}  // namespace

TEST_CASE("hom spaces agree with the dense linear system") {
  std::mt19937_64 rng(41);
  for (int p : {3, 5}) {
    auto mods = corpus(p, rng);
    for (auto& m : mods) {
      HomSolver graded(m, 3), plain(m, 3, true);
      for (auto& n : mods) {
        auto want = hom_dim_oracle(m, n);
        auto basis = graded.basis(n);
        CHECK(basis.size() == want);
        CHECK(plain.dimension(n) == want);
        for (auto& h : basis) CHECK(is_intertwiner(m, n, h));
      }
    }
  }
}

TEST_CASE("hom spaces between r = 2 modules") {
  const int p = 3;
  std::vector<FpModule> mods;
  for (int l : {0, 2, 4, 5, 8}) mods.push_back(sl2::build_verma_r2(l, p));
  for (int l : {1, 3, 8}) mods.push_back(sl2::build_simple_r2(l, p));
  for (auto& m : mods)
    for (auto& n : mods) CHECK(hom_space(m, n).size() == hom_dim_oracle(m, n));
}

TEST_CASE("hom basis elements are linearly independent") {
  auto m = direct_sum(sl2::build_simple(1, 5), sl2::build_simple(1, 5));
  auto basis = hom_space(m, m);
  REQUIRE(basis.size() == 4);
  FpMatrix flat(m.field(), basis.size(), m.dim() * m.dim());
  for (std::size_t k = 0; k < basis.size(); ++k)
    for (std::size_t i = 0; i < m.dim() * m.dim(); ++i) flat(k, i) = basis[k].data()[i];
  CHECK(flat.rank() == 4);
}

TEST_CASE("relations are enforced on construction") {
  const Field& f = Field::get(5);
  auto l = sl2::build_simple(2, 5);
  auto acts = l.actions();
  acts[0] = acts[0].scaled(2);
  CHECK_THROWS_AS(FpModule(l.schema_ptr(), f, acts), RelationViolation);
  CHECK_THROWS_AS(FpModule(l.schema_ptr(), f, {acts[0], acts[1]}), SchemaMismatch);
  CHECK_THROWS_AS(require_compatible(l, sl2::build_simple(1, 3)), SchemaMismatch);
}

TEST_CASE("weight gradings") {
  auto z = sl2::build_verma_r2(7, 5);
  const auto& g = z.grading();
  CHECK_FALSE(g.trivial);
  CHECK(g.blocks.size() == 25);
  auto z1 = sl2::build_verma_r1(2, 5);
  CHECK(z1.grading().blocks.size() == 5);
  std::mt19937_64 rng(42);
  auto c = conjugate(z1, random_invertible(z1.field(), 5, rng));
  bool diag = true;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j)
      if (i != j && c.action(2)(i, j)) diag = false;
  CHECK(c.grading().trivial == !diag);
}

TEST_CASE("text format round trips") {
  for (auto m : {sl2::build_verma_r2(5, 3), sl2::build_simple(3, 7), FpModule::zero(sl2::schema(5, 1), Field::get(5))}) {
    auto back = FpModule::from_text(m.to_text(), m.schema_ptr());
    CHECK(back.dim() == m.dim());
    CHECK(back.actions() == m.actions());
    auto loose = FpModule::from_text(m.to_text());
    CHECK(loose.schema().labels == m.schema().labels);
  }
  CHECK_THROWS(FpModule::from_text("dim=2 q=5 labels=e\n1,0\n"));
  CHECK_THROWS(FpModule::from_text("dim=1 q=5 labels=e\n7\n"));
  CHECK_THROWS_AS(FpModule::from_text("dim=1 q=5 labels=x\n0\n", sl2::schema(5, 1)), SchemaMismatch);
}

TEST_CASE("scalar extension preserves homs") {
  auto z = sl2::build_verma_r1(1, 3);
  auto l = sl2::build_simple(1, 3);
  const Field& big = Field::get(9);
  CHECK(hom_space(z.extend_scalars(big), l.extend_scalars(big)).size() == hom_space(z, l).size());
}
