#include "frobkern/rootsys.hpp"

#include <cmath>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "frobkern/field.hpp"

namespace fk {

namespace {

constexpr std::size_t kMaxPositiveRoots = 240;
constexpr std::uint64_t kMaxWeylOrder = 1000000;

IntMatrix zeros(std::size_t n) { return IntMatrix(n, std::vector<std::int64_t>(n, 0)); }

IntMatrix type_matrix(char letter, int n) {
  IntMatrix a = zeros(n);
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto link = [&](int i, int j, int aij, int aji) {
    a[i][j] = aij;
    a[j][i] = aji;
  };
  switch (letter) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1, -1);
      break;
    case 'B':
    case 'C':
      if (n < 2) throw ParseError("B/C need rank >= 2");
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1, -1);
      if (letter == 'B')
        link(n - 2, n - 1, -1, -2);
      else
        link(n - 2, n - 1, -2, -1);
      break;
    case 'D':
      if (n < 4) throw ParseError("D needs rank >= 4");
      for (int i = 0; i + 3 < n; ++i) link(i, i + 1, -1, -1);
      link(n - 3, n - 2, -1, -1);
      link(n - 3, n - 1, -1, -1);
      break;
    case 'E':
      if (n < 6 || n > 8) throw ParseError("E needs rank 6..8");
      link(0, 2, -1, -1);
      link(1, 3, -1, -1);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1, -1, -1);
      break;
    case 'F':
      if (n != 4) throw ParseError("F needs rank 4");
      link(0, 1, -1, -1);
      link(1, 2, -1, -2);
      link(2, 3, -1, -1);
      break;
    case 'G':
      if (n != 2) throw ParseError("G needs rank 2");
      link(0, 1, -3, -1);
      break;
    default:
      throw ParseError(std::string("unknown Cartan type letter ") + letter);
  }
  return a;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::int64_t parse_int(const std::string& tok) {
  std::string t = trim(tok);
  if (t.empty()) throw ParseError("empty integer");
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(t, &used);
  } catch (const std::exception&) {
    throw ParseError("bad integer '" + t + "'");
  }
  if (used != t.size()) throw ParseError("bad integer '" + t + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::uint64_t factorial(int n) {
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
  return r;
}

// |W| of an irreducible finite type, identified by rank, |Psi+| and lacing.
std::uint64_t weyl_order(std::size_t n, std::size_t np, bool simply_laced) {
  const int k = static_cast<int>(n);
  if (simply_laced) {
    if (np == n * (n + 1) / 2) return factorial(k + 1);
    if (n >= 4 && np == n * (n - 1)) return (std::uint64_t{1} << (k - 1)) * factorial(k);
    if (n == 6 && np == 36) return 51840;
    if (n == 7 && np == 63) return 2903040;
    if (n == 8 && np == 120) return 696729600;
  } else {
    if (n == 2 && np == 6) return 12;
    if (n == 4 && np == 24) return 1152;
    if (np == n * n) return (std::uint64_t{1} << k) * factorial(k);
  }
  throw NotFiniteType("unrecognised root system component");
}

std::vector<std::int64_t> flatten(const IntMatrix& m) {
  std::vector<std::int64_t> v;
  for (auto& r : m) v.insert(v.end(), r.begin(), r.end());
  return v;
}

}  // namespace

CartanSpec CartanSpec::of_type(const std::string& type) {
  auto parts = split(type, 'x');
  std::vector<IntMatrix> blocks;
  std::size_t total = 0;
  for (auto& raw : parts) {
    std::string t = trim(raw);
    if (t.size() < 2 || !std::isalpha(static_cast<unsigned char>(t[0])))
      throw ParseError("bad Cartan type '" + type + "'");
    char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(t[0])));
    auto n = parse_int(t.substr(1));
    if (n < 1 || n > 8) throw ParseError("bad rank in Cartan type '" + type + "'");
    blocks.push_back(type_matrix(letter, static_cast<int>(n)));
    total += static_cast<std::size_t>(n);
  }
  CartanSpec s;
  s.rank = total;
  s.matrix = zeros(total);
  std::size_t off = 0;
  for (auto& b : blocks) {
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) s.matrix[off + i][off + j] = b[i][j];
    off += b.size();
  }
  s.label = type;
  return s;
}

CartanSpec CartanSpec::parse(const std::string& text) {
  std::string t = trim(text);
  if (t.rfind("type=", 0) == 0) return of_type(trim(t.substr(5)));
  if (!t.empty() && std::isalpha(static_cast<unsigned char>(t[0]))) return of_type(t);
  CartanSpec s;
  for (auto& row : split(t, ';')) {
    std::vector<std::int64_t> r;
    for (auto& tok : split(row, ',')) r.push_back(parse_int(tok));
    s.matrix.push_back(r);
  }
  s.rank = s.matrix.size();
  for (auto& r : s.matrix)
    if (r.size() != s.rank) throw ParseError("Cartan matrix is not square");
  return s;
}

void CartanSpec::validate() const {
  const std::size_t n = rank;
  if (n == 0 || matrix.size() != n) throw NotFiniteType("empty or malformed Cartan matrix");
  for (std::size_t i = 0; i < n; ++i) {
    if (matrix[i].size() != n) throw NotFiniteType("Cartan matrix is not square");
    if (matrix[i][i] != 2) throw NotFiniteType("Cartan diagonal entries must be 2");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (matrix[i][j] > 0) throw NotFiniteType("positive off-diagonal Cartan entry");
      if ((matrix[i][j] == 0) != (matrix[j][i] == 0)) throw NotFiniteType("Cartan zero pattern not symmetric");
    }
  }
  // symmetrizer d with d_i a_ij = d_j a_ji, propagated along the Dynkin graph
  std::vector<double> d(n, 0.0);
  for (std::size_t s = 0; s < n; ++s) {
    if (d[s] != 0.0) continue;
    d[s] = 1.0;
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      auto i = queue.front();
      queue.pop_front();
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j || matrix[i][j] == 0) continue;
        double want = d[i] * static_cast<double>(matrix[i][j]) / static_cast<double>(matrix[j][i]);
        if (d[j] == 0.0) {
          d[j] = want;
          queue.push_back(j);
        } else if (std::abs(d[j] - want) > 1e-9 * want) {
          throw NotFiniteType("Cartan matrix is not symmetrizable");
        }
      }
    }
  }
  // Cholesky on the symmetrization
  std::vector<std::vector<double>> b(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b[i][j] = d[i] * static_cast<double>(matrix[i][j]);
  for (std::size_t k = 0; k < n; ++k) {
    double piv = b[k][k];
    for (std::size_t m = 0; m < k; ++m) piv -= b[k][m] * b[k][m];
    if (piv <= 1e-9) throw NotFiniteType("Cartan matrix is not of finite type");
    b[k][k] = std::sqrt(piv);
    for (std::size_t i = k + 1; i < n; ++i) {
      double v = b[i][k];
      for (std::size_t m = 0; m < k; ++m) v -= b[i][m] * b[k][m];
      b[i][k] = v / b[k][k];
    }
  }
}

RootSystem::RootSystem(CartanSpec spec) : spec_(std::move(spec)) {
  spec_.validate();
  const std::size_t n = spec_.rank;
  const auto& a = spec_.matrix;

  // positive roots by simple-reflection closure, tracking coroots alongside
  std::set<std::vector<std::int64_t>> seen;
  std::deque<std::size_t> queue;
  for (std::size_t i = 0; i < n; ++i) {
    Root r{std::vector<std::int64_t>(n, 0), std::vector<std::int64_t>(n, 0)};
    r.coeffs[i] = r.coroot[i] = 1;
    seen.insert(r.coeffs);
    roots_.push_back(r);
    queue.push_back(roots_.size() - 1);
  }
  while (!queue.empty()) {
    Root beta = roots_[queue.front()];
    queue.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      std::int64_t c = 0, dc = 0;
      for (std::size_t j = 0; j < n; ++j) {
        c += a[i][j] * beta.coeffs[j];
        dc += a[j][i] * beta.coroot[j];
      }
      Root img = beta;
      img.coeffs[i] -= c;
      img.coroot[i] -= dc;
      bool positive = true, nonzero = false;
      for (auto x : img.coeffs) {
        if (x < 0) positive = false;
        if (x != 0) nonzero = true;
      }
      if (!positive || !nonzero || seen.count(img.coeffs)) continue;
      seen.insert(img.coeffs);
      roots_.push_back(img);
      if (roots_.size() > kMaxPositiveRoots) throw NotFiniteType("positive root count exceeds cap");
      queue.push_back(roots_.size() - 1);
    }
  }

  // connected components of the Dynkin graph
  std::vector<int> comp_of(n, -1);
  for (std::size_t s = 0; s < n; ++s) {
    if (comp_of[s] >= 0) continue;
    Component c;
    std::deque<std::size_t> q{s};
    comp_of[s] = static_cast<int>(comps_.size());
    while (!q.empty()) {
      auto i = q.front();
      q.pop_front();
      c.nodes.push_back(i);
      for (std::size_t j = 0; j < n; ++j)
        if (j != i && a[i][j] != 0) {
          if (a[i][j] != -1) c.simply_laced = false;
          if (comp_of[j] < 0) {
            comp_of[j] = static_cast<int>(comps_.size());
            q.push_back(j);
          }
        }
    }
    comps_.push_back(c);
  }
  for (auto& r : roots_) {
    for (std::size_t i = 0; i < n; ++i)
      if (r.coeffs[i] != 0) {
        comps_[comp_of[i]].positive_roots++;
        break;
      }
  }
  std::uint64_t order = 1;
  for (auto& c : comps_) {
    h_ = std::max(h_, static_cast<int>(2 * c.positive_roots / c.nodes.size()));
    order *= weyl_order(c.nodes.size(), c.positive_roots, c.simply_laced);
    if (order > kMaxWeylOrder) throw NotFiniteType("Weyl group order exceeds cap");
  }

  // Weyl group on weight coordinates: s_i(lambda) = lambda - lambda_i alpha_i
  std::vector<IntMatrix> gens;
  for (std::size_t i = 0; i < n; ++i) {
    IntMatrix s = zeros(n);
    for (std::size_t k = 0; k < n; ++k) {
      s[k][k] = 1;
      s[k][i] -= a[k][i];
    }
    gens.push_back(s);
  }
  IntMatrix id = zeros(n);
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  std::set<std::vector<std::int64_t>> wseen{flatten(id)};
  weyl_.push_back(id);
  for (std::size_t k = 0; k < weyl_.size(); ++k) {
    for (auto& g : gens) {
      IntMatrix w = compose(g, weyl_[k]);
      auto key = flatten(w);
      if (wseen.insert(key).second) {
        weyl_.push_back(w);
        if (weyl_.size() > kMaxWeylOrder) throw NotFiniteType("Weyl group order exceeds cap");
      }
    }
  }
  if (weyl_.size() != order) throw NotFiniteType("Weyl group closure disagrees with classification");
}

RootSystem build_root_system(const CartanSpec& spec) { return RootSystem(spec); }

IntMatrix compose(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size();
  IntMatrix c = zeros(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a[i][k])
        for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

std::int64_t RootSystem::pairing(const Weight& lambda, std::size_t root) const {
  if (root >= roots_.size()) throw std::out_of_range("positive root index out of range");
  if (lambda.size() != rank()) throw std::invalid_argument("weight has wrong rank");
  std::int64_t s = 0;
  for (std::size_t j = 0; j < rank(); ++j) s += roots_[root].coroot[j] * lambda[j];
  return s;
}

Weight RootSystem::simple_root(std::size_t j) const {
  Weight w(rank());
  for (std::size_t k = 0; k < rank(); ++k) w[k] = spec_.matrix[k][j];
  return w;
}

Weight RootSystem::act(const IntMatrix& w, const Weight& lambda) const {
  Weight out(rank(), 0);
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j) out[i] += w[i][j] * lambda[j];
  return out;
}

Weight RootSystem::dot_action(const IntMatrix& w, const Weight& lambda) const {
  return sub(act(w, add(lambda, rho())), rho());
}

namespace {
bool divisible_by_power(std::int64_t x, std::int64_t p, int r) {
  if (x == 0 || r <= 0) return true;
  return valuation(x, p) >= r;
}
}  // namespace

std::vector<std::size_t> psi_r(const Weight& lambda, int r, std::int64_t p, const RootSystem& rs) {
  std::vector<std::size_t> out;
  Weight lr = add(lambda, rs.rho());
  for (std::size_t k = 0; k < rs.positive_roots().size(); ++k)
    if (divisible_by_power(rs.pairing(lr, k), p, r)) out.push_back(k);
  return out;
}

bool is_pr_regular(const Weight& lambda, int r, std::int64_t p, const RootSystem& rs) {
  return psi_r(lambda, r, p, rs).empty();
}

std::pair<Weight, Weight> restricted_decompose(const Weight& lambda, int r, std::int64_t p) {
  std::int64_t m = ipow(p, r);
  Weight l0(lambda.size()), l1(lambda.size());
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    l0[i] = mod_floor(lambda[i], m);
    l1[i] = (lambda[i] - l0[i]) / m;
  }
  return {l0, l1};
}

bool in_alcove_c0(const Weight& lambda, std::int64_t p, const RootSystem& rs) {
  Weight lr = add(lambda, rs.rho());
  for (std::size_t k = 0; k < rs.positive_roots().size(); ++k) {
    auto v = rs.pairing(lr, k);
    if (v <= 0 || v >= p) return false;
  }
  return true;
}

bool is_good_prime(std::int64_t p, const RootSystem& rs) {
  for (auto& r : rs.positive_roots())
    for (auto c : r.coeffs)
      if (c % p == 0 && c != 0) return false;
  return true;
}

Weight add(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) throw std::invalid_argument("weight rank mismatch");
  Weight c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

Weight sub(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) throw std::invalid_argument("weight rank mismatch");
  Weight c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

Weight scale(std::int64_t c, const Weight& a) {
  Weight r(a);
  for (auto& x : r) x *= c;
  return r;
}

std::string to_string(const Weight& w) {
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
  return os.str();
}

Weight parse_weight(const std::string& text) {
  Weight w;
  for (auto& tok : split(text, ',')) w.push_back(parse_int(tok));
  return w;
}

}  // namespace fk
