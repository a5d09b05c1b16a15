#include "monitor/learn/model.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "monitor/error.hpp"

namespace monitor::learn {
namespace {

using nlohmann::json;

constexpr const char* kFormat = "monitor.model";
constexpr int kVersion = 1;

std::span<const double> row(const Matrix& m, Eigen::Index r) {
  return {m.data() + r * m.cols(), static_cast<std::size_t>(m.cols())};
}

Criterion parse_criterion(const std::string& s) {
  return s == "entropy" ? Criterion::kEntropy : Criterion::kGini;
}

// Row-aligned view of x in the fitted column order.
Matrix aligned_input(const TrainedModel& m, const data::FeatureMatrix& x) {
  const std::set<std::string> want(m.feature_names.begin(), m.feature_names.end());
  const std::set<std::string> have(x.column_names().begin(), x.column_names().end());
  std::vector<std::string> missing, unexpected;
  std::set_difference(want.begin(), want.end(), have.begin(), have.end(),
                      std::back_inserter(missing));
  std::set_difference(have.begin(), have.end(), want.begin(), want.end(),
                      std::back_inserter(unexpected));
  if (!missing.empty() || !unexpected.empty()) {
    std::string msg = "feature mismatch:";
    auto list = [&](const char* label, const std::vector<std::string>& v) {
      if (v.empty()) return;
      msg += std::string(" ") + label + " [";
      for (std::size_t i = 0; i < v.size(); ++i) msg += (i ? ", " : "") + v[i];
      msg += "]";
    };
    list("missing", missing);
    list("unexpected", unexpected);
    fail(ErrorKind::kFeatureMismatch, msg);
  }
  const data::FeatureMatrix ordered =
      x.column_names() == m.feature_names ? x : x.select_columns(m.feature_names);
  return fusion::apply_scaler(m.scaler, to_matrix(ordered));
}

double estimate(const Estimator& e, std::span<const double> x) {
  return std::visit([&](const auto& model) { return model.predict_positive(x); }, e);
}

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    const auto v = row(m, r);
    rows.push_back(std::vector<double>(v.begin(), v.end()));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", rows}};
}

Matrix matrix_from(const json& j) {
  Matrix m(j.at("rows").get<Eigen::Index>(), j.at("cols").get<Eigen::Index>());
  const json& data = j.at("data");
  require(static_cast<Eigen::Index>(data.size()) == m.rows(), ErrorKind::kSchema,
          "model matrix row count mismatch");
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    const auto v = data[static_cast<std::size_t>(r)].get<std::vector<double>>();
    require(static_cast<Eigen::Index>(v.size()) == m.cols(), ErrorKind::kSchema,
            "model matrix column count mismatch");
    for (Eigen::Index c = 0; c < m.cols(); ++c) m(r, c) = v[static_cast<std::size_t>(c)];
  }
  return m;
}

json tree_json(const DecisionTree& t) {
  json nodes = json::array();
  for (const auto& n : t.nodes)
    nodes.push_back({n.feature, n.threshold, n.left, n.right, n.positive, n.samples});
  return {{"nodes", nodes}, {"importance", t.importance}};
}

DecisionTree tree_from(const json& j) {
  DecisionTree t;
  for (const auto& n : j.at("nodes"))
    t.nodes.push_back({n.at(0).get<int>(), n.at(1).get<double>(), n.at(2).get<int>(),
                       n.at(3).get<int>(), n.at(4).get<double>(), n.at(5).get<int>()});
  t.importance = j.at("importance").get<std::vector<double>>();
  const int count = static_cast<int>(t.nodes.size());
  for (const auto& n : t.nodes)
    require(n.feature < 0 || (n.left > 0 && n.left < count && n.right > 0 && n.right < count),
            ErrorKind::kSchema, "tree node references a missing child");
  return t;
}

json spec_json(const ClassifierSpec& s) {
  json params = json::object();
  for (const auto& [name, v] : s.params) {
    if (const auto* d = std::get_if<double>(&v)) params[name] = *d;
    else params[name] = std::get<std::string>(v);
  }
  return {{"kind", to_string(s.kind)}, {"params", params}, {"seed", s.seed}};
}

ClassifierSpec spec_from(const json& j) {
  ClassifierSpec s;
  s.kind = parse_model_kind(j.at("kind").get<std::string>());
  for (const auto& [name, v] : j.at("params").items()) {
    if (v.is_number()) s.params[name] = v.get<double>();
    else s.params[name] = v.get<std::string>();
  }
  s.seed = j.at("seed").get<std::uint64_t>();
  validate(s);
  return s;
}

json estimator_json(const Estimator& e) {
  struct Visitor {
    json operator()(const DecisionTree& t) const { return tree_json(t); }
    json operator()(const KnnModel& m) const {
      return {{"k", m.k}, {"x", matrix_json(m.x)}, {"y", m.y}};
    }
    json operator()(const SvmModel& m) const {
      return {{"kernel", to_string(m.kernel.kernel)}, {"gamma", m.kernel.gamma},
              {"degree", m.kernel.degree},           {"coef0", m.kernel.coef0},
              {"support", matrix_json(m.support)},   {"dual_coef", m.dual_coef},
              {"bias", m.bias},                      {"platt_a", m.platt_a},
              {"platt_b", m.platt_b}};
    }
    json operator()(const RandomForest& f) const {
      json trees = json::array();
      for (const auto& t : f.trees) trees.push_back(tree_json(t));
      return {{"trees", trees}, {"importance", f.importance}};
    }
    json operator()(const LogisticModel& m) const {
      return {{"coef", std::vector<double>(m.coef.data(), m.coef.data() + m.coef.size())},
              {"intercept", m.intercept}};
    }
  };
  return std::visit(Visitor{}, e);
}

Estimator estimator_from(ModelKind kind, const json& j) {
  switch (kind) {
    case ModelKind::kCart: return tree_from(j);
    case ModelKind::kKnn: {
      KnnModel m;
      m.k = j.at("k").get<int>();
      m.x = matrix_from(j.at("x"));
      m.y = j.at("y").get<std::vector<int>>();
      return m;
    }
    case ModelKind::kSvm: {
      SvmModel m;
      m.kernel.kernel = parse_kernel(j.at("kernel").get<std::string>());
      m.kernel.gamma = j.at("gamma").get<double>();
      m.kernel.degree = j.at("degree").get<int>();
      m.kernel.coef0 = j.at("coef0").get<double>();
      m.support = matrix_from(j.at("support"));
      m.dual_coef = j.at("dual_coef").get<std::vector<double>>();
      m.bias = j.at("bias").get<double>();
      m.platt_a = j.at("platt_a").get<double>();
      m.platt_b = j.at("platt_b").get<double>();
      return m;
    }
    case ModelKind::kRf: {
      RandomForest f;
      for (const auto& t : j.at("trees")) f.trees.push_back(tree_from(t));
      f.importance = j.at("importance").get<std::vector<double>>();
      return f;
    }
    case ModelKind::kLogreg: {
      LogisticModel m;
      const auto coef = j.at("coef").get<std::vector<double>>();
      m.coef = Eigen::Map<const Eigen::VectorXd>(coef.data(), static_cast<Eigen::Index>(coef.size()));
      m.intercept = j.at("intercept").get<double>();
      return m;
    }
  }
  fail(ErrorKind::kSchema, "unknown model kind");
}

}  // namespace

Matrix to_matrix(const data::FeatureMatrix& m) {
  Matrix out(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  std::copy(m.values().begin(), m.values().end(), out.data());
  return out;
}

void require_binary_labels(const data::Labels& y, std::size_t rows) {
  require(y.size() == rows, ErrorKind::kInvalidArgument,
          "label count " + std::to_string(y.size()) + " differs from row count " +
              std::to_string(rows));
  bool seen[2] = {false, false};
  for (int l : y) {
    require(l == 0 || l == 1, ErrorKind::kInvalidArgument, "labels must be 0 (real) or 1 (fake)");
    seen[l] = true;
  }
  require(seen[0] && seen[1], ErrorKind::kSingleClass, "training data holds a single class");
}

TrainedModel fit(const ClassifierSpec& spec, const data::FeatureMatrix& x, const data::Labels& y) {
  validate(spec);
  require(x.rows() > 0, ErrorKind::kInvalidArgument, "cannot fit on zero rows");
  require_binary_labels(y, x.rows());

  TrainedModel m;
  m.spec = spec;
  m.feature_names = x.column_names();
  const Matrix raw = to_matrix(x);
  m.scaler = fusion::fit_scaler(raw);
  const Matrix xs = fusion::apply_scaler(m.scaler, raw);

  switch (spec.kind) {
    case ModelKind::kCart: {
      TreeOptions o;
      o.max_depth = spec.integer("max_depth", 0);
      o.criterion = parse_criterion(spec.text("criterion", "gini"));
      o.seed = spec.seed;
      m.estimator = fit_tree(xs, y, o);
      break;
    }
    case ModelKind::kKnn:
      m.estimator = fit_knn(xs, y, spec.integer("n_neighbors", 5));
      break;
    case ModelKind::kSvm: {
      KernelParams kp;
      kp.kernel = parse_kernel(spec.text("kernel", "rbf"));
      kp.gamma = spec.real("gamma", 1.0 / std::max<double>(1.0, static_cast<double>(x.cols())));
      kp.degree = spec.integer("degree", 3);
      kp.coef0 = spec.real("coef0", 0.0);
      m.estimator = fit_svm(xs, y, spec.real("C", 1.0), kp);
      break;
    }
    case ModelKind::kRf: {
      ForestOptions o;
      o.n_estimators = spec.integer("n_estimators", 100);
      o.max_depth = spec.integer("max_depth", 0);
      o.criterion = parse_criterion(spec.text("criterion", "gini"));
      o.seed = spec.seed;
      m.estimator = fit_forest(xs, y, o);
      break;
    }
    case ModelKind::kLogreg:
      m.estimator = fit_logistic(xs, y, spec.real("C", 1.0));
      break;
  }
  return m;
}

TrainedModel fit(const ClassifierSpec& spec, const data::FeatureMatrix& x) {
  require(x.has_labels(), ErrorKind::kInvalidArgument, "training matrix has no labels");
  return fit(spec, x, x.labels());
}

std::vector<double> predict_positive(const TrainedModel& m, const data::FeatureMatrix& x) {
  const Matrix xs = aligned_input(m, x);
  std::vector<double> p(x.rows());
  for (Eigen::Index r = 0; r < xs.rows(); ++r)
    p[static_cast<std::size_t>(r)] = std::clamp(estimate(m.estimator, row(xs, r)), 0.0, 1.0);
  return p;
}

Eigen::MatrixXd predict_proba(const TrainedModel& m, const data::FeatureMatrix& x) {
  const std::vector<double> p = predict_positive(m, x);
  Eigen::MatrixXd out(static_cast<Eigen::Index>(p.size()), 2);
  for (std::size_t i = 0; i < p.size(); ++i) {
    out(static_cast<Eigen::Index>(i), 0) = 1.0 - p[i];
    out(static_cast<Eigen::Index>(i), 1) = p[i];
  }
  return out;
}

data::Labels threshold_labels(const std::vector<double>& positive) {
  data::Labels out(positive.size());
  for (std::size_t i = 0; i < positive.size(); ++i) out[i] = positive[i] >= 0.5 ? 1 : 0;
  return out;
}

data::Labels predict_labels(const TrainedModel& m, const data::FeatureMatrix& x) {
  return threshold_labels(predict_positive(m, x));
}

std::string model_to_json(const TrainedModel& m) {
  json j;
  j["format"] = kFormat;
  j["version"] = kVersion;
  j["spec"] = spec_json(m.spec);
  j["feature_names"] = m.feature_names;
  j["scaler"] = {{"lo", m.scaler.lo}, {"hi", m.scaler.hi}};
  j["estimator"] = estimator_json(m.estimator);
  return j.dump(1) + "\n";
}

TrainedModel model_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    require(j.at("format").get<std::string>() == kFormat, ErrorKind::kSchema,
            "not a model file");
    require(j.at("version").get<int>() == kVersion, ErrorKind::kSchema,
            "unsupported model version");
    TrainedModel m;
    m.spec = spec_from(j.at("spec"));
    m.feature_names = j.at("feature_names").get<std::vector<std::string>>();
    m.scaler.fitted = true;
    m.scaler.lo = j.at("scaler").at("lo").get<std::vector<double>>();
    m.scaler.hi = j.at("scaler").at("hi").get<std::vector<double>>();
    require(m.scaler.lo.size() == m.feature_names.size() &&
                m.scaler.hi.size() == m.feature_names.size(),
            ErrorKind::kSchema, "scaler width differs from feature count");
    m.estimator = estimator_from(m.spec.kind, j.at("estimator"));
    return m;
  } catch (const json::exception& e) {
    fail(ErrorKind::kSchema, std::string("malformed model: ") + e.what());
  }
}

void save_model(const TrainedModel& m, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  require(static_cast<bool>(out), ErrorKind::kIo, "cannot write " + path.string());
  out << model_to_json(m);
}

TrainedModel load_model(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), ErrorKind::kIo, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return model_from_json(ss.str());
}

}  // namespace monitor::learn
