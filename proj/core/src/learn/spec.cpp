#include "monitor/learn/spec.hpp"

#include <cmath>
#include <set>

#include "monitor/data/feature_matrix.hpp"
#include "monitor/error.hpp"

namespace monitor::learn {

const char* to_string(ModelKind k) {
  switch (k) {
    case ModelKind::kCart: return "cart";
    case ModelKind::kKnn: return "knn";
    case ModelKind::kSvm: return "svm";
    case ModelKind::kRf: return "rf";
    case ModelKind::kLogreg: return "logreg";
  }
  return "?";
}

ModelKind parse_model_kind(std::string_view text) {
  for (ModelKind k : {ModelKind::kCart, ModelKind::kKnn, ModelKind::kSvm, ModelKind::kRf,
                      ModelKind::kLogreg})
    if (text == to_string(k)) return k;
  fail(ErrorKind::kInvalidArgument, "unknown model kind '" + std::string(text) + "'");
}

std::string to_string(const ParamValue& v) {
  if (const auto* d = std::get_if<double>(&v)) return data::format_double(*d);
  return std::get<std::string>(v);
}

double ClassifierSpec::real(const std::string& name, double fallback) const {
  auto it = params.find(name);
  if (it == params.end()) return fallback;
  const auto* d = std::get_if<double>(&it->second);
  require(d != nullptr, ErrorKind::kInvalidArgument, "parameter '" + name + "' must be numeric");
  return *d;
}

int ClassifierSpec::integer(const std::string& name, int fallback) const {
  const double v = real(name, fallback);
  require(v == std::floor(v) && std::abs(v) < 1e9, ErrorKind::kInvalidArgument,
          "parameter '" + name + "' must be an integer");
  return static_cast<int>(v);
}

std::string ClassifierSpec::text(const std::string& name, const std::string& fallback) const {
  auto it = params.find(name);
  if (it == params.end()) return fallback;
  const auto* s = std::get_if<std::string>(&it->second);
  require(s != nullptr, ErrorKind::kInvalidArgument, "parameter '" + name + "' must be text");
  return *s;
}

std::string ClassifierSpec::describe() const {
  std::string out = to_string(kind);
  out += '(';
  bool first = true;
  for (const auto& [name, value] : params) {
    if (!first) out += ',';
    first = false;
    out += name + "=" + to_string(value);
  }
  out += ')';
  return out;
}

void validate(const ClassifierSpec& spec) {
  static const std::map<ModelKind, std::set<std::string>> known = {
      {ModelKind::kCart, {"max_depth", "criterion"}},
      {ModelKind::kKnn, {"n_neighbors"}},
      {ModelKind::kSvm, {"C", "gamma", "kernel", "degree", "coef0"}},
      {ModelKind::kRf, {"n_estimators", "max_depth", "criterion"}},
      {ModelKind::kLogreg, {"C"}},
  };
  for (const auto& [name, _] : spec.params)
    require(known.at(spec.kind).count(name) != 0, ErrorKind::kInvalidArgument,
            "unknown parameter '" + name + "' for " + to_string(spec.kind));
  auto check = [](bool ok, const std::string& what) {
    require(ok, ErrorKind::kInvalidArgument, what);
  };
  switch (spec.kind) {
    case ModelKind::kCart:
    case ModelKind::kRf: {
      check(spec.integer("max_depth", 0) >= 0, "max_depth must be >= 0");
      const std::string c = spec.text("criterion", "gini");
      check(c == "gini" || c == "entropy", "criterion must be gini or entropy");
      if (spec.kind == ModelKind::kRf)
        check(spec.integer("n_estimators", 100) >= 1, "n_estimators must be >= 1");
      break;
    }
    case ModelKind::kKnn:
      check(spec.integer("n_neighbors", 5) >= 1, "n_neighbors must be >= 1");
      break;
    case ModelKind::kSvm: {
      check(spec.real("C", 1.0) > 0.0, "C must be positive");
      if (spec.has("gamma")) check(spec.real("gamma", 1.0) > 0.0, "gamma must be positive");
      const std::string k = spec.text("kernel", "rbf");
      check(k == "linear" || k == "poly" || k == "rbf" || k == "sigmoid",
            "kernel must be linear, poly, rbf or sigmoid");
      check(spec.integer("degree", 3) >= 1, "degree must be >= 1");
      spec.real("coef0", 0.0);
      break;
    }
    case ModelKind::kLogreg:
      check(spec.real("C", 1.0) > 0.0, "C must be positive");
      break;
  }
}

ClassifierSpec default_spec(ModelKind kind, std::uint64_t seed) {
  ClassifierSpec s;
  s.kind = kind;
  s.seed = seed;
  return s;
}

}  // namespace monitor::learn
