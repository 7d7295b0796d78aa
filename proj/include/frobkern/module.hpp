#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "frobkern/matrix.hpp"

namespace fk {

class SchemaMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RelationViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Schema {
  std::string name;
  std::vector<std::string> labels;
  // Describes the first violated defining relation, if any.
  std::function<std::optional<std::string>(const std::vector<FpMatrix>&)> relations;
  // Commuting operators whose joint eigenspaces grade every module of the schema.
  std::function<std::vector<FpMatrix>(const std::vector<FpMatrix>&)> torus;
};
using SchemaPtr = std::shared_ptr<const Schema>;

// Schema without relations or torus, used for modules read from text.
SchemaPtr free_schema(std::vector<std::string> labels);
bool same_schema(const Schema& a, const Schema& b);

// Decomposition of the standard basis into joint eigenspaces of the torus.
struct Grading {
  std::vector<std::size_t> block_of;
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<std::vector<elem>> keys;
  std::map<std::vector<elem>, std::size_t> index;
  bool trivial = true;

  std::optional<std::size_t> find(const std::vector<elem>& key) const {
    auto it = index.find(key);
    if (it == index.end()) return std::nullopt;
    return it->second;
  }
};

class FpModule {
 public:
  FpModule() = default;
  // Verifies shapes and, when check_relations is set, the schema relations.
  FpModule(SchemaPtr schema, const Field& f, std::vector<FpMatrix> actions, bool check_relations = true);
  static FpModule zero(SchemaPtr schema, const Field& f);

  std::size_t dim() const { return dim_; }
  const Field& field() const { return *f_; }
  const Schema& schema() const { return *schema_; }
  const SchemaPtr& schema_ptr() const { return schema_; }
  std::size_t generator_count() const { return acts_.size(); }
  const std::vector<FpMatrix>& actions() const { return acts_; }
  const FpMatrix& action(std::size_t i) const { return acts_.at(i); }
  const FpMatrix& action(const std::string& label) const;
  const Grading& grading() const;

  std::string to_text() const;
  // Labels in the header must match the schema when one is given.
  static FpModule from_text(const std::string& text, SchemaPtr schema = nullptr);

  FpModule extend_scalars(const Field& big) const;

 private:
  struct Lazy;
  SchemaPtr schema_;
  const Field* f_ = nullptr;
  std::size_t dim_ = 0;
  std::vector<FpMatrix> acts_;
  std::shared_ptr<Lazy> lazy_;
};

void require_compatible(const FpModule& a, const FpModule& b);
// Checks H rho_M(g) = rho_N(g) H for every generator.
bool is_intertwiner(const FpModule& m, const FpModule& n, const FpMatrix& h);

}  // namespace fk
