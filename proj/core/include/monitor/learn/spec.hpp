#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <variant>

namespace monitor::learn {

enum class ModelKind { kCart, kKnn, kSvm, kRf, kLogreg };

const char* to_string(ModelKind k);
ModelKind parse_model_kind(std::string_view text);

/// Numeric hyperparameters are stored as double, categorical ones as text.
/// The variant ordering (numbers before text) only matters for tie-breaking.
using ParamValue = std::variant<double, std::string>;
using Params = std::map<std::string, ParamValue>;

std::string to_string(const ParamValue& v);

/// Hyperparameters by kind, with defaults used when a name is absent:
///   cart:   max_depth (0 = unlimited), criterion {gini, entropy}
///   knn:    n_neighbors (5)
///   svm:    C (1), gamma (1/d when absent), kernel {linear, poly, rbf, sigmoid},
///           degree (3), coef0 (0)
///   rf:     n_estimators (100), max_depth (0 = unlimited), criterion (gini)
///   logreg: C (1)
struct ClassifierSpec {
  ModelKind kind = ModelKind::kCart;
  Params params;
  std::uint64_t seed = 0;

  double real(const std::string& name, double fallback) const;
  int integer(const std::string& name, int fallback) const;
  std::string text(const std::string& name, const std::string& fallback) const;
  bool has(const std::string& name) const { return params.count(name) != 0; }

  /// e.g. `cart(criterion=gini,max_depth=3)`
  std::string describe() const;

  friend bool operator==(const ClassifierSpec&, const ClassifierSpec&) = default;
};

/// Rejects unknown parameter names and out-of-range values.
void validate(const ClassifierSpec& spec);

ClassifierSpec default_spec(ModelKind kind, std::uint64_t seed = 0);

}  // namespace monitor::learn
