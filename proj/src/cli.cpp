#include "frobkern/cli.hpp"

#include <algorithm>
#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "frobkern/heisenberg.hpp"
#include "frobkern/sl2.hpp"
#include "frobkern/verma.hpp"
#include "json.hpp"

namespace fk::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string type, cartan, weight, gamma, check = "all", kind, out_path, qs;
  std::int64_t p = 0;
  int r = 1;
  double tol = -1;
  std::uint64_t seed = 0;
  bool as_json = false, as_text = false;
};

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--type", o.type, "Cartan type, e.g. A1, A2, B2, G2, A1xA1");
  sub->add_option("--cartan", o.cartan, "Cartan matrix rows, e.g. 2,-1;-1,2");
  sub->add_option("--p", o.p, "prime");
  sub->add_option("--r", o.r, "Frobenius kernel height");
  sub->add_option("--weight", o.weight, "weight in fundamental-weight coordinates, comma separated");
  sub->add_option("--seed", o.seed, "seed for randomized steps");
  sub->add_option("--out", o.out_path, "write the constructed module in text format to this path");
  auto* j = sub->add_flag("--json", o.as_json, "JSON output");
  sub->add_flag("--text", o.as_text, "plain text output")->excludes(j);
}

RootSystem root_system(const Options& o) {
  if (!o.type.empty() && !o.cartan.empty()) throw CLI::ValidationError("--type and --cartan are exclusive");
  if (o.type.empty() && o.cartan.empty()) throw CLI::ValidationError("one of --type or --cartan is required");
  return build_root_system(CartanSpec::parse(o.type.empty() ? o.cartan : o.type));
}

std::int64_t prime(const Options& o) {
  if (o.p < 3 || !is_prime(o.p)) throw CLI::ValidationError("--p must be an odd prime");
  return o.p;
}

Weight weight(const std::string& text, const RootSystem& rs, const char* flag) {
  if (text.empty()) throw CLI::ValidationError(std::string(flag) + " is required");
  Weight w = parse_weight(text);
  if (w.size() != rs.rank())
    throw CLI::ValidationError(std::string(flag) + " needs " + std::to_string(rs.rank()) + " coordinates");
  return w;
}

std::vector<std::int64_t> parse_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw CLI::ValidationError("bad integer list '" + text + "'");
    }
  }
  return out;
}

json weight_json(const Weight& w) { return json(w); }

void print_text(std::ostream& out, const json& j) {
  for (auto& [k, v] : j.items()) out << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
}

FpModule build_module(const Options& o) {
  const int p = static_cast<int>(prime(o));
  const auto w = parse_list(o.weight.empty() ? "0" : o.weight);
  if (w.size() != 1) throw CLI::ValidationError("modules are SL(2) only; --weight takes one integer");
  const std::int64_t l = w[0];
  if (o.kind == "simple") return o.r == 1 ? sl2::build_simple(static_cast<int>(l), p) : sl2::build_simple_r2(static_cast<int>(l), p);
  if (o.kind == "verma") return o.r == 1 ? sl2::build_verma_r1(l, p) : sl2::build_verma_r2(l, p);
  if (o.kind == "steinberg") return sl2::steinberg(p, o.r);
  if (o.kind == "induced") return sl2::torus_induced(l, p, o.r);
  if (o.kind == "projective") {
    if (o.r != 1) throw CLI::ValidationError("projective covers are available for r = 1");
    const auto& proj = sl2::projectives_r1(p);
    if (l < 0 || l >= p) throw CLI::ValidationError("weight out of range");
    return proj[static_cast<std::size_t>(l)].projective;
  }
  throw CLI::ValidationError("unknown --kind '" + o.kind + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Frobenius kernel representation toolkit"};
  app.name("frobkern");
  app.require_subcommand(1);
  Options o;

  auto* depth_cmd = app.add_subcommand("depth", "depth of a weight");
  auto* regular_cmd = app.add_subcommand("regular", "p^r-regularity of a weight");
  auto* psi_cmd = app.add_subcommand("psi", "roots whose pairing with lambda+rho is divisible by p^r");
  auto* classify_cmd = app.add_subcommand("classify", "classification report for Z_r(lambda)");
  auto* reduce_cmd = app.add_subcommand("reduce", "depth reduction lambda = p^d mu + (p^d-1) rho");
  auto* block_cmd = app.add_subcommand("block", "block membership of --gamma in B_r(lambda)");
  auto* sl2_cmd = app.add_subcommand("verify-sl2", "SL(2) verification suites");
  auto* heis_cmd = app.add_subcommand("verify-heisenberg", "Heisenberg commuting variety point counts");
  auto* dump_cmd = app.add_subcommand("dump-module", "write an SL(2) module in text format");
  for (auto* s : {depth_cmd, regular_cmd, psi_cmd, classify_cmd, reduce_cmd, block_cmd, sl2_cmd, heis_cmd, dump_cmd})
    add_common(s, o);
  block_cmd->add_option("--gamma", o.gamma, "weight tested for membership")->required();
  std::string checks = "all";
  for (auto& n : sl2::check_names()) checks += ", " + n;
  sl2_cmd->add_option("--check", o.check, "one of: " + checks);
  heis_cmd->add_option("--qs", o.qs, "comma-separated field sizes");
  heis_cmd->add_option("--tol", o.tol, "slope tolerance (default 0.15 for r <= 2, 0.3 otherwise)");
  dump_cmd->add_option("--kind", o.kind, "simple, verma, steinberg, induced or projective")->required();

  const bool json_mode = std::find(args.begin(), args.end(), "--json") != args.end();
  auto fail = [&](const std::string& msg, int code) {
    if (json_mode)
      out << json{{"error", msg}}.dump(2) << "\n";
    else
      err << "error: " << msg << "\n";
    return code;
  };

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    return fail(e.what(), 2);
  }

  try {
    json result;
    int code = 0;
    std::string text;
    if (depth_cmd->parsed()) {
      auto rs = root_system(o);
      auto w = weight(o.weight, rs, "--weight");
      auto d = depth(w, prime(o), rs);
      result = {{"lambda", weight_json(w)}, {"p", o.p}, {"depth", d.neg_infinity ? json("-inf") : json(d.value)}};
      text = d.str() + "\n";
    } else if (regular_cmd->parsed()) {
      auto rs = root_system(o);
      auto w = weight(o.weight, rs, "--weight");
      bool reg = is_pr_regular(w, o.r, prime(o), rs);
      result = {{"lambda", weight_json(w)}, {"p", o.p}, {"r", o.r}, {"regular", reg}};
      text = std::string(reg ? "true" : "false") + "\n";
    } else if (psi_cmd->parsed()) {
      auto rs = root_system(o);
      auto w = weight(o.weight, rs, "--weight");
      auto idx = psi_r(w, o.r, prime(o), rs);
      json roots = json::array();
      for (auto i : idx) roots.push_back(rs.positive_roots()[i].coeffs);
      result = {{"lambda", weight_json(w)}, {"p", o.p}, {"r", o.r}, {"indices", idx}, {"roots", roots},
                {"all_roots", idx.size() == rs.positive_roots().size()}};
      for (auto& c : roots) text += c.dump() + "\n";
    } else if (classify_cmd->parsed()) {
      auto rs = root_system(o);
      result = to_json(classify(weight(o.weight, rs, "--weight"), o.r, prime(o), rs));
    } else if (reduce_cmd->parsed()) {
      auto rs = root_system(o);
      auto w = weight(o.weight, rs, "--weight");
      auto red = depth_reduce(w, prime(o), o.r, rs);
      result = {{"lambda", weight_json(w)}, {"p", o.p}, {"r", o.r}, {"d", red.d}, {"mu", weight_json(red.mu)}};
      text = "d=" + std::to_string(red.d) + " mu=" + to_string(red.mu) + "\n";
    } else if (block_cmd->parsed()) {
      auto rs = root_system(o);
      auto w = weight(o.weight, rs, "--weight");
      auto g = weight(o.gamma, rs, "--gamma");
      bool in = block_contains(g, w, o.r, prime(o), rs);
      result = {{"lambda", weight_json(w)}, {"gamma", weight_json(g)}, {"p", o.p}, {"r", o.r}, {"contains", in}};
      text = std::string(in ? "true" : "false") + "\n";
    } else if (sl2_cmd->parsed()) {
      const int p = static_cast<int>(prime(o));
      std::vector<sl2::Report> reports;
      if (o.check == "all") {
        for (auto& n : sl2::check_names()) {
          bool r2_only = n == "dr2" || n == "vv4";
          if ((r2_only || n == "vv6") && p > 5) continue;
          reports.push_back(sl2::run_check(n, p, n == "vv6" ? o.r : 1, o.seed));
        }
      } else {
        reports.push_back(sl2::run_check(o.check, p, o.r, o.seed));
      }
      bool pass = true;
      for (auto& rep : reports) {
        pass = pass && rep.pass();
        text += std::string(rep.pass() ? "[PASS] " : "[FAIL] ") + rep.check + " p=" + std::to_string(rep.p) +
                " r=" + std::to_string(rep.r) + " cases=" + std::to_string(rep.cases.size()) + "\n";
      }
      if (reports.size() == 1) {
        result = reports[0].to_json();
      } else {
        json all = json::array();
        for (auto& rep : reports) all.push_back(rep.to_json());
        result = {{"reports", all}, {"pass", pass}};
      }
      code = pass ? 0 : 1;
    } else if (heis_cmd->parsed()) {
      auto qs = parse_list(o.qs.empty() ? "3,5,7" : o.qs);
      double tol = o.tol >= 0 ? o.tol : heisenberg::default_tolerance(o.r);
      auto fit = heisenberg::dimension_fit(o.r, qs, tol);
      result = heisenberg::to_json(fit);
      std::ostringstream ts;
      for (auto& c : fit.counts) ts << "q=" << c.q << " count=" << c.count << "\n";
      ts << "slope=" << result["slope"].get<double>() << " target=" << fit.target << (fit.pass ? " [PASS]" : " [FAIL]") << "\n";
      text = ts.str();
      code = fit.pass ? 0 : 1;
    } else if (dump_cmd->parsed()) {
      FpModule m = build_module(o);
      if (o.out_path.empty()) {
        out << m.to_text();
        return 0;
      }
      std::ofstream f(o.out_path);
      if (!f) throw std::runtime_error("cannot open " + o.out_path);
      f << m.to_text();
      result = {{"path", o.out_path}, {"dim", m.dim()}, {"labels", m.schema().labels}};
      text = "wrote " + std::to_string(m.dim()) + "-dimensional module to " + o.out_path + "\n";
    }
    if (o.as_json)
      out << result.dump(2) << "\n";
    else if (text.empty())
      print_text(out, result);
    else
      out << text;
    return code;
  } catch (const CLI::ParseError& e) {
    return fail(e.what(), 2);
  } catch (const std::exception& e) {
    return fail(e.what(), 2);
  }
}

}  // namespace fk::cli
