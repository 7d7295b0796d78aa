#include "frobkern/module.hpp"

#include <mutex>
#include <sstream>

namespace fk {

struct FpModule::Lazy {
  std::once_flag once;
  Grading grading;
};

SchemaPtr free_schema(std::vector<std::string> labels) {
  auto s = std::make_shared<Schema>();
  s->name = "free";
  s->labels = std::move(labels);
  return s;
}

bool same_schema(const Schema& a, const Schema& b) { return a.name == b.name && a.labels == b.labels; }

FpModule::FpModule(SchemaPtr schema, const Field& f, std::vector<FpMatrix> actions, bool check_relations)
    : schema_(std::move(schema)), f_(&f), acts_(std::move(actions)), lazy_(std::make_shared<Lazy>()) {
  if (!schema_) throw std::invalid_argument("module without schema");
  if (acts_.size() != schema_->labels.size()) throw SchemaMismatch("generator count does not match schema");
  dim_ = acts_.empty() ? 0 : acts_[0].rows();
  for (auto& a : acts_) {
    if (a.rows() != dim_ || a.cols() != dim_) throw std::invalid_argument("action matrices must be square of equal size");
    if (dim_ > 0 && !(a.field() == f)) throw std::invalid_argument("action matrix over the wrong field");
  }
  if (check_relations && schema_->relations && dim_ > 0) {
    if (auto bad = schema_->relations(acts_)) throw RelationViolation(schema_->name + ": " + *bad);
  }
}

FpModule FpModule::zero(SchemaPtr schema, const Field& f) {
  std::vector<FpMatrix> acts(schema->labels.size(), FpMatrix(f, 0, 0));
  return FpModule(std::move(schema), f, std::move(acts), false);
}

const FpMatrix& FpModule::action(const std::string& label) const {
  for (std::size_t i = 0; i < schema_->labels.size(); ++i)
    if (schema_->labels[i] == label) return acts_[i];
  throw std::out_of_range("no generator labelled " + label);
}

const Grading& FpModule::grading() const {
  std::call_once(lazy_->once, [this] {
    Grading& g = lazy_->grading;
    std::vector<FpMatrix> ops;
    if (schema_->torus && dim_ > 0) ops = schema_->torus(acts_);
    bool diagonal = !ops.empty();
    for (auto& t : ops)
      for (std::size_t i = 0; i < dim_ && diagonal; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
          if (i != j && t(i, j)) {
            diagonal = false;
            break;
          }
    g.block_of.assign(dim_, 0);
    std::vector<std::vector<elem>> key_of(dim_);
    if (diagonal)
      for (std::size_t i = 0; i < dim_; ++i)
        for (auto& t : ops) key_of[i].push_back(t(i, i));
    g.trivial = !diagonal;
    for (std::size_t i = 0; i < dim_; ++i) g.index.emplace(key_of[i], 0);
    std::size_t b = 0;
    for (auto& [k, id] : g.index) {
      id = b++;
      g.keys.push_back(k);
    }
    g.blocks.assign(g.keys.size(), {});
    for (std::size_t i = 0; i < dim_; ++i) {
      g.block_of[i] = g.index.at(key_of[i]);
      g.blocks[g.block_of[i]].push_back(i);
    }
  });
  return lazy_->grading;
}

std::string FpModule::to_text() const {
  std::ostringstream os;
  os << "dim=" << dim_ << " q=" << f_->q() << " labels=";
  for (std::size_t i = 0; i < schema_->labels.size(); ++i) os << (i ? "," : "") << schema_->labels[i];
  os << "\n";
  for (auto& a : acts_)
    for (std::size_t i = 0; i < dim_; ++i) {
      for (std::size_t j = 0; j < dim_; ++j) os << (j ? "," : "") << static_cast<int>(a(i, j));
      os << "\n";
    }
  return os.str();
}

namespace {
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

std::size_t to_size(const std::string& s, const char* what) {
  std::size_t used = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (s.empty() || used != s.size()) throw std::invalid_argument(std::string("bad ") + what + " '" + s + "'");
  return v;
}
}  // namespace

FpModule FpModule::from_text(const std::string& text, SchemaPtr schema) {
  std::istringstream is(text);
  std::string header;
  if (!std::getline(is, header)) throw std::invalid_argument("empty module text");
  auto fields = split(header, ' ');
  if (fields.size() != 3 || fields[0].rfind("dim=", 0) != 0 || fields[1].rfind("q=", 0) != 0 ||
      fields[2].rfind("labels=", 0) != 0)
    throw std::invalid_argument("bad module header '" + header + "'");
  std::size_t n = to_size(fields[0].substr(4), "dimension");
  int q = static_cast<int>(to_size(fields[1].substr(2), "field size"));
  auto labels = split(fields[2].substr(7), ',');
  if (labels.size() == 1 && labels[0].empty()) labels.clear();
  if (!schema)
    schema = free_schema(labels);
  else if (schema->labels != labels)
    throw SchemaMismatch("module labels do not match the schema");
  const Field& f = Field::get(q);
  std::vector<FpMatrix> acts;
  for (std::size_t g = 0; g < labels.size(); ++g) {
    FpMatrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) {
      std::string line;
      if (!std::getline(is, line)) throw std::invalid_argument("module text truncated");
      auto toks = split(line, ',');
      if (toks.size() != n) throw std::invalid_argument("bad row length in module text");
      for (std::size_t j = 0; j < n; ++j) {
        auto v = to_size(toks[j], "entry");
        if (v >= static_cast<std::size_t>(q)) throw std::invalid_argument("entry not reduced");
        m(i, j) = static_cast<elem>(v);
      }
    }
    acts.push_back(std::move(m));
  }
  std::string rest;
  while (std::getline(is, rest))
    if (!rest.empty()) throw std::invalid_argument("trailing data in module text");
  return FpModule(schema, f, std::move(acts));
}

FpModule FpModule::extend_scalars(const Field& big) const {
  std::vector<FpMatrix> acts;
  for (auto& a : acts_) acts.push_back(dim_ ? a.extend_to(big) : FpMatrix(big, 0, 0));
  return FpModule(schema_, big, std::move(acts), false);
}

void require_compatible(const FpModule& a, const FpModule& b) {
  if (!same_schema(a.schema(), b.schema())) throw SchemaMismatch("modules over different schemas");
  if (!(a.field() == b.field())) throw SchemaMismatch("modules over different fields");
}

bool is_intertwiner(const FpModule& m, const FpModule& n, const FpMatrix& h) {
  if (h.rows() != n.dim() || h.cols() != m.dim()) return false;
  for (std::size_t g = 0; g < m.generator_count(); ++g)
    if (h * m.action(g) != n.action(g) * h) return false;
  return true;
}

}  // namespace fk
