#include "atiyah/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace atiyah {

using nlohmann::json;

json to_json(const Configuration& c) {
  json pts = json::array();
  for (const Vector3& p : c.points) {
    pts.push_back({p.x(), p.y(), p.z()});
  }
  return json{{"points", pts}};
}

Configuration config_from_json(const json& j) {
  if (!j.is_object() || !j.contains("points") || !j["points"].is_array()) {
    throw std::invalid_argument(
        "configuration JSON must be an object with a \"points\" array");
  }
  const json& pts = j["points"];
  Configuration c;
  c.points.reserve(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const json& p = pts[i];
    if (!p.is_array() || p.size() != 3) {
      throw std::invalid_argument("point " + std::to_string(i) +
                                  ": expected an array of 3 numbers");
    }
    Vector3 v;
    for (std::size_t k = 0; k < 3; ++k) {
      if (!p[k].is_number()) {
        throw std::invalid_argument("point " + std::to_string(i) +
                                    ": coordinate " + std::to_string(k) +
                                    " is not a number");
      }
      v(static_cast<Eigen::Index>(k)) = p[k].get<double>();
    }
    if (!v.allFinite()) {
      throw std::invalid_argument("point " + std::to_string(i) +
                                  ": non-finite coordinate");
    }
    c.points.push_back(v);
  }
  return c;
}

Configuration load_configuration(const std::string& path) {
  json j;
  if (path == "-") {
    j = json::parse(std::cin);
  } else {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    j = json::parse(in);
  }
  return config_from_json(j);
}

json to_json(const AnalysisReport& r) {
  return json{{"n", r.n},
              {"D", {r.D.real(), r.D.imag()}},
              {"absD", r.absD},
              {"detH", r.detH},
              {"minEig", r.minEig},
              {"cn", r.cn},
              {"conj1_margin", r.conj1_margin},
              {"conj2_margin", r.conj2_margin}};
}

json to_json(const PdCertificate& cert) {
  json j{{"collinear4", cert.collinear4},
         {"minEigH4", cert.minEigH4},
         {"verdictPD", cert.verdictPD}};
  if (cert.collinear4) {
    j["tripleA"] = nullptr;
    j["tripleB"] = nullptr;
    j["detA_tripleA"] = nullptr;
    j["detA_tripleB"] = nullptr;
  } else {
    j["tripleA"] = {cert.tripleA[0] + 1, cert.tripleA[1] + 1,
                    cert.tripleA[2] + 1};
    j["tripleB"] = {cert.tripleB[0] + 1, cert.tripleB[1] + 1,
                    cert.tripleB[2] + 1};
    j["detA_tripleA"] = cert.detA_tripleA;
    j["detA_tripleB"] = cert.detA_tripleB;
  }
  return j;
}

json to_json(const VerifyRecord& rec) {
  if (rec.error) {
    return json{{"index", rec.index}, {"n", rec.n}, {"error", rec.message}};
  }
  return json{{"index", rec.index},
              {"n", rec.n},
              {"absD", rec.absD},
              {"detH", rec.detH},
              {"minEig", rec.minEig},
              {"conj1_margin", rec.conj1_margin},
              {"conj2_margin", rec.conj2_margin},
              {"max_residual", rec.max_residual}};
}

json to_json(const VerifySummary& s) {
  return json{{"summary", true},
              {"count", s.count},
              {"n", s.n},
              {"suite", to_string(s.suite)},
              {"tol", s.tol},
              {"min_conj1_margin", s.min_conj1_margin},
              {"min_conj2_margin", s.min_conj2_margin},
              {"max_residual", s.max_residual},
              {"violations", s.violations},
              {"errors", s.errors}};
}

json to_json(const MinimizeResult& r) {
  return json{{"bestConfig", to_json(r.bestConfig)},
              {"bestAbsD", r.bestAbsD},
              {"iterations", r.iterations},
              {"restarts", r.restarts},
              {"converged", r.converged}};
}

namespace {

std::string num17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string csv_header() {
  return "n,absD,detH,minEig,conj1_margin,conj2_margin,max_residual";
}

std::string csv_row(const VerifyRecord& rec) {
  std::ostringstream out;
  out << rec.n << ',' << num17(rec.absD) << ',' << num17(rec.detH) << ','
      << num17(rec.minEig) << ',' << num17(rec.conj1_margin) << ','
      << num17(rec.conj2_margin) << ',' << num17(rec.max_residual);
  return out.str();
}

}  // namespace atiyah
