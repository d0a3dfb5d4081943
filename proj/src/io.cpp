#include "glasner/io.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

namespace glasner {

namespace {

Json cr_json(double v) {
  // JSON has no inf/nan
  if (std::isnan(v)) return nullptr;
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

}  // namespace

Json point_set_to_json(const ExactPointSet& s) {
  Json j;
  j["dim"] = s.dim();
  j["exact"] = true;
  Json pts = Json::array();
  for (const auto& p : s.points()) {
    Json row = Json::array();
    for (int i = 0; i < s.dim(); ++i) row.push_back(format_rational(p[i]));
    pts.push_back(std::move(row));
  }
  j["points"] = std::move(pts);
  return j;
}

Json point_set_to_json(const FloatPointSet& s) {
  Json j;
  j["dim"] = s.dim();
  j["exact"] = false;
  Json pts = Json::array();
  for (const auto& p : s.points()) {
    Json row = Json::array();
    for (int i = 0; i < s.dim(); ++i) row.push_back(fmt_double(p[i]));
    pts.push_back(std::move(row));
  }
  j["points"] = std::move(pts);
  return j;
}

AnyPointSet point_set_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("points"))
    throw std::invalid_argument("point set json needs {dim, exact, points}");
  const int dim = j.at("dim").get<int>();
  const bool exact = j.value("exact", true);
  const auto& pts = j.at("points");
  if (!pts.is_array() || pts.empty()) throw std::invalid_argument("point set json: empty points");
  if (exact) {
    std::vector<ExactTorusPoint> out;
    for (const auto& row : pts) {
      if (static_cast<int>(row.size()) != dim)
        throw std::invalid_argument("point set json: row length != dim");
      std::vector<Rational> c;
      for (const auto& cell : row) c.push_back(parse_rational(cell.get<std::string>()));
      out.push_back(reduce_to_torus(c));
    }
    return ExactPointSet(std::move(out));
  }
  std::vector<FloatTorusPoint> out;
  for (const auto& row : pts) {
    if (static_cast<int>(row.size()) != dim)
      throw std::invalid_argument("point set json: row length != dim");
    std::vector<double> c;
    for (const auto& cell : row)
      c.push_back(cell.is_string() ? std::stod(cell.get<std::string>()) : cell.get<double>());
    out.push_back(reduce_to_torus(c));
  }
  return FloatPointSet(std::move(out));
}

AnyPointSet load_point_set(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open point set file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw std::invalid_argument("malformed point set file " + path + ": " + e.what());
  }
  return point_set_from_json(j);
}

void save_point_set(const AnyPointSet& s, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write point set file: " + path);
  std::visit([&](const auto& set) { out << point_set_to_json(set).dump(2) << "\n"; }, s);
}

Json family_to_json(const MatrixFamily& fam) {
  Json j;
  j["n"] = fam.rows;
  j["m"] = fam.cols;
  j["mode"] = fam.mode == PrimeMode::SinglePrime ? "single" : "independent";
  Json entries = Json::array();
  for (const auto& f : fam.entries) {
    Json coeffs = Json::array();
    for (const auto& c : f.coefficients()) coeffs.push_back(format_rational(c));
    entries.push_back(std::move(coeffs));
  }
  j["entries"] = std::move(entries);
  return j;
}

MatrixFamily family_from_json(const Json& j) {
  MatrixFamily fam;
  fam.rows = j.at("n").get<int>();
  fam.cols = j.at("m").get<int>();
  const std::string mode = j.at("mode").get<std::string>();
  if (mode == "single")
    fam.mode = PrimeMode::SinglePrime;
  else if (mode == "independent")
    fam.mode = PrimeMode::IndependentPrimes;
  else
    throw std::invalid_argument("family json: mode must be \"independent\" or \"single\"");
  const auto& entries = j.at("entries");
  if (static_cast<int>(entries.size()) != fam.rows * fam.cols)
    throw std::invalid_argument("family json: entries count must equal n*m (row-major)");
  for (const auto& coeffs : entries) {
    std::vector<Rational> c;
    for (const auto& cell : coeffs) c.push_back(parse_rational(cell.get<std::string>()));
    fam.entries.emplace_back(std::move(c));
  }
  return fam;
}

MatrixFamily load_family(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open family file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw std::invalid_argument("malformed family file " + path + ": " + e.what());
  }
  return family_from_json(j);
}

void save_family(const MatrixFamily& fam, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write family file: " + path);
  out << family_to_json(fam).dump(2) << "\n";
}

Json to_json(const DensityReport& rep) {
  Json j;
  switch (rep.verdict) {
    case Verdict::Dense: j["verdict"] = "dense"; break;
    case Verdict::NotDense: j["verdict"] = "not_dense"; break;
    case Verdict::Unknown: j["verdict"] = "unknown"; break;
  }
  j["covering_radius_lo"] = rep.covering_radius_lo;
  j["covering_radius_hi"] = rep.covering_radius_hi;
  j["grid_resolution"] = rep.grid_resolution;
  if (rep.witness)
    j["witness"] = *rep.witness;
  else
    j["witness"] = nullptr;
  return j;
}

Json to_json(const SearchReport& rep) {
  Json j;
  j["found"] = rep.found;
  if (rep.witness_primes)
    j["witness_primes"] = rep.witness_primes->primes;
  else
    j["witness_primes"] = nullptr;
  if (rep.matrix) {
    Json rows = Json::array();
    for (int i = 0; i < rep.matrix->rows; ++i) {
      Json row = Json::array();
      for (int c = 0; c < rep.matrix->cols; ++c) row.push_back(rep.matrix->at(i, c).str());
      rows.push_back(std::move(row));
    }
    j["matrix"] = std::move(rows);
  } else {
    j["matrix"] = nullptr;
  }
  j["density"] = to_json(rep.density);
  j["assignments_tested"] = rep.assignments_tested;
  j["unknown_flagged"] = rep.unknown_flagged;
  j["wall_seconds"] = rep.wall_seconds;
  return j;
}

Json to_json(const ExponentScanResult& res) {
  Json j;
  Json rows = Json::array();
  for (const auto& row : res.rows) {
    Json r;
    r["eps"] = row.eps;
    r["k_min_success"] = row.k_min_success ? Json(*row.k_min_success) : Json(nullptr);
    r["k_max_failure"] = row.k_max_failure ? Json(*row.k_max_failure) : Json(nullptr);
    r["budget_exhausted"] = row.budget_exhausted;
    r["assignments_total"] = row.assignments_total;
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  j["fitted_exponent"] = cr_json(res.fitted_exponent);
  j["reference_exponent"] = res.reference_exponent;
  j["warnings"] = res.warnings;
  return j;
}

std::string metric_name(Metric m) { return m == Metric::Sup ? "sup" : "euclidean"; }

Metric metric_from_name(const std::string& name) {
  if (name == "sup") return Metric::Sup;
  if (name == "euclidean") return Metric::Euclidean;
  throw std::invalid_argument("unknown metric: " + name);
}

std::string strategy_name(Strategy s) {
  switch (s) {
    case Strategy::Exhaustive: return "exhaustive";
    case Strategy::RandomSample: return "random";
    case Strategy::GreedyRowwise: return "greedy";
  }
  return "exhaustive";
}

Strategy strategy_from_name(const std::string& name) {
  if (name == "exhaustive") return Strategy::Exhaustive;
  if (name == "random") return Strategy::RandomSample;
  if (name == "greedy") return Strategy::GreedyRowwise;
  throw std::invalid_argument("unknown strategy: " + name);
}

}  // namespace glasner
