#include "monitor/vision/iqa_model.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "monitor/error.hpp"

namespace monitor::vision {

using nlohmann::json;

const char* to_string(IqaKind k) { return k == IqaKind::kBrisque ? "brisque" : "niqe"; }

double ScoreCalibration::map(double raw) const {
  const double span = distorted_median - pristine_median;
  const double score = span > 0 ? 10.0 + 70.0 * (raw - pristine_median) / span : 10.0;
  return std::clamp(score, 1.0, 100.0);
}

void IqaModel::validate() const {
  const auto d = mu.size();
  require(d > 0, ErrorKind::kSchema, "IQA model has an empty mean vector");
  require(covariance.rows() == d && covariance.cols() == d, ErrorKind::kSchema,
          "IQA covariance is not d x d");
  require((covariance - covariance.transpose()).cwiseAbs().maxCoeff() <= 1e-12,
          ErrorKind::kSchema, "IQA covariance is not symmetric");
  require(mu.allFinite() && covariance.allFinite(), ErrorKind::kSchema,
          "IQA model holds non-finite values");
  require(shrinkage >= 0.0 && shrinkage <= 1.0, ErrorKind::kSchema, "shrinkage outside [0, 1]");
}

IqaModel fit_gaussian_model(IqaKind kind, const std::vector<Eigen::VectorXd>& samples) {
  require(samples.size() >= 2, ErrorKind::kInvalidArgument, "need at least two feature vectors");
  const auto d = samples.front().size();
  Eigen::VectorXd mu = Eigen::VectorXd::Zero(d);
  for (const auto& s : samples) {
    require(s.size() == d, ErrorKind::kInvalidArgument, "feature vectors differ in length");
    mu += s;
  }
  mu /= static_cast<double>(samples.size());
  Eigen::MatrixXd cov = Eigen::MatrixXd::Zero(d, d);
  for (const auto& s : samples) {
    const Eigen::VectorXd c = s - mu;
    cov.noalias() += c * c.transpose();
  }
  cov /= static_cast<double>(samples.size() - 1);
  cov = 0.5 * (cov + cov.transpose());
  cov.diagonal().array() += kCovarianceRegularization;
  IqaModel m;
  m.kind = kind;
  m.mu = std::move(mu);
  m.covariance = std::move(cov);
  m.sample_count = samples.size();
  return m;
}

std::string iqa_model_to_json(const IqaModel& m) {
  m.validate();
  json j;
  j["format"] = "monitor.iqa_model";
  j["version"] = 1;
  j["kind"] = to_string(m.kind);
  j["d"] = m.dimension();
  j["sample_count"] = m.sample_count;
  j["mu"] = std::vector<double>(m.mu.data(), m.mu.data() + m.mu.size());
  std::vector<double> cov;
  for (int r = 0; r < m.covariance.rows(); ++r)
    for (int c = 0; c < m.covariance.cols(); ++c) cov.push_back(m.covariance(r, c));
  j["covariance"] = cov;
  j["shrinkage"] = m.shrinkage;
  j["calibration"] = {{"pristine_median", m.calibration.pristine_median},
                      {"distorted_median", m.calibration.distorted_median}};
  return j.dump(1);
}

IqaModel iqa_model_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorKind::kSchema, std::string("IQA model is not valid JSON: ") + e.what());
  }
  try {
    require(j.at("format") == "monitor.iqa_model", ErrorKind::kSchema, "not an IQA model file");
    require(j.at("version") == 1, ErrorKind::kSchema, "unsupported IQA model version");
    IqaModel m;
    const auto kind = j.at("kind").get<std::string>();
    require(kind == "brisque" || kind == "niqe", ErrorKind::kSchema, "unknown IQA kind " + kind);
    m.kind = kind == "brisque" ? IqaKind::kBrisque : IqaKind::kNiqe;
    const int d = j.at("d").get<int>();
    const auto mu = j.at("mu").get<std::vector<double>>();
    const auto cov = j.at("covariance").get<std::vector<double>>();
    require(static_cast<int>(mu.size()) == d && static_cast<int>(cov.size()) == d * d,
            ErrorKind::kSchema, "IQA model sizes disagree with d");
    m.mu = Eigen::Map<const Eigen::VectorXd>(mu.data(), d);
    m.covariance.resize(d, d);
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) m.covariance(r, c) = cov[static_cast<std::size_t>(r) * d + c];
    m.shrinkage = j.value("shrinkage", 0.0);
    m.sample_count = j.value("sample_count", std::size_t{0});
    const auto& cal = j.at("calibration");
    m.calibration.pristine_median = cal.at("pristine_median").get<double>();
    m.calibration.distorted_median = cal.at("distorted_median").get<double>();
    m.validate();
    return m;
  } catch (const json::exception& e) {
    fail(ErrorKind::kSchema, std::string("malformed IQA model: ") + e.what());
  }
}

void save_iqa_model(const IqaModel& m, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  require(static_cast<bool>(out), ErrorKind::kIo, "cannot write " + path.string());
  out << iqa_model_to_json(m) << '\n';
}

IqaModel load_iqa_model(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), ErrorKind::kIo, "cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return iqa_model_from_json(ss.str());
}

}  // namespace monitor::vision
