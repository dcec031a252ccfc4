#include "ellrs/serialization.hpp"

#include "ellrs/errors.hpp"

namespace ellrs {

Json to_json(const Partition& p) { return Json(p.parts()); }

Json to_json(Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Json to_json(const ModelParams& params) {
  return Json{{"n", params.n},
              {"m", params.m},
              {"g", params.g},
              {"p", params.p},
              {"alpha", params.alpha},
              {"level_locked", params.level_locked},
              {"precision", to_string(params.precision)}};
}

Json to_json(const PolynomialInE& P) {
  Json arr = Json::array();
  for (const auto& [key, c] : P.terms()) arr.push_back(Json{{"key", to_json(key)}, {"coeff", c}});
  return arr;
}

Json to_json(const Expansion& e) {
  Json arr = Json::array();
  for (const auto& [nu, v] : e) arr.push_back(Json{{"nu", to_json(nu)}, {"value", v}});
  return arr;
}

namespace {

Json complex_vector(const std::vector<Complex>& v) {
  Json arr = Json::array();
  for (const auto& z : v) arr.push_back(to_json(z));
  return arr;
}

Json complex_matrix(const Eigen::MatrixXcd& M) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < M.cols(); ++j) row.push_back(to_json(M(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json partition_list(const std::vector<Partition>& ps) {
  Json arr = Json::array();
  for (const auto& p : ps) arr.push_back(to_json(p));
  return arr;
}

}  // namespace

Json to_json(const SpectrumResult& s) {
  Json points = Json::array();
  for (const auto& pt : s.points) {
    points.push_back(Json{{"label", to_json(pt.label)},
                          {"e", complex_vector(pt.e)},
                          {"dual_norm", pt.dual_norm},
                          {"eigenvector", complex_vector(pt.eigenvector)}});
  }
  Json steps = Json::array();
  for (const auto& st : s.steps) {
    steps.push_back(Json{{"p_from", st.p_from},
                         {"p_to", st.p_to},
                         {"min_gap", st.min_gap},
                         {"max_move", st.max_move},
                         {"accepted", st.accepted}});
  }
  return Json{{"params", to_json(s.params)},
              {"seed", s.seed},
              {"basis", partition_list(s.basis)},
              {"points", std::move(points)},
              {"homotopy_steps", std::move(steps)}};
}

Json to_json(const FusionTable& t) {
  Json entries = Json::array();
  for (const auto& [key, v] : t.N) {
    const auto& [lam, mu, kappa] = key;
    entries.push_back(Json{{"lam", to_json(lam)}, {"mu", to_json(mu)}, {"kappa", to_json(kappa)}, {"value", v}});
  }
  Json flagged = Json::array();
  for (const auto& [lam, mu, kappa] : t.flagged)
    flagged.push_back(Json{{"lam", to_json(lam)}, {"mu", to_json(mu)}, {"kappa", to_json(kappa)}});
  return Json{{"params", to_json(t.params)},
              {"route", to_string(t.method)},
              {"basis", partition_list(t.basis)},
              {"entries", std::move(entries)},
              {"flagged", std::move(flagged)}};
}

Json to_json(const SMatrix& s) {
  const Eigen::MatrixXcd I = s.S * s.Sinv;
  const double inv_residual =
      (I - Eigen::MatrixXcd::Identity(I.rows(), I.cols())).cwiseAbs().maxCoeff();
  return Json{{"params", to_json(s.params)},
              {"basis", partition_list(s.basis)},
              {"S", complex_matrix(s.S)},
              {"Sinv", complex_matrix(s.Sinv)},
              {"n_value", s.n_value},
              {"det_abs", s.det_abs},
              {"det_abs_closed_form", s.det_abs_closed_form},
              {"residuals",
               Json{{"S_Sinv_minus_identity", inv_residual},
                    {"det_relative", std::abs(s.det_abs - s.det_abs_closed_form) / s.det_abs_closed_form}}}};
}

Json to_json(const OracleReport& r) {
  return Json{{"id", r.id},
              {"max_abs", r.max_abs},
              {"max_rel", r.max_rel},
              {"tolerance", r.tolerance},
              {"relative", r.relative},
              {"passed", r.passed},
              {"note", r.note}};
}

Partition partition_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidArgument("partition must be a JSON array");
  return Partition(j.get<std::vector<int>>());
}

Complex complex_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("re") || !j.contains("im"))
    throw InvalidArgument("complex value must be {\"re\", \"im\"}");
  return {j.at("re").get<double>(), j.at("im").get<double>()};
}

}  // namespace ellrs
