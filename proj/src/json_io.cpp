#include "cwlab/json_io.hpp"

#include "cwlab/error.hpp"

namespace cwlab {

namespace {

std::string family_name(Family f) {
  switch (f) {
    case Family::kA: return "A";
    case Family::kD: return "D";
    case Family::kE6: return "E6";
  }
  return "?";
}

template <class F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
}

Eigen::MatrixXd real_matrix_from_json(const Json& j) {
  return guarded([&] {
    const auto rows = static_cast<Eigen::Index>(j.size());
    const auto cols = rows ? static_cast<Eigen::Index>(j.at(0).size()) : 0;
    Eigen::MatrixXd m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
      const auto& row = j.at(static_cast<std::size_t>(i));
      if (static_cast<Eigen::Index>(row.size()) != cols)
        throw Error(ErrorCode::kParse, "ragged matrix");
      for (Eigen::Index k = 0; k < cols; ++k) {
        const auto& e = row.at(static_cast<std::size_t>(k));
        m(i, k) = e.is_string() ? Scalar::parse(e.get<std::string>()).to_double()
                                : e.get<double>();
      }
    }
    return m;
  });
}

Eigen::VectorXd real_vector_from_json(const Json& j) {
  return guarded([&] {
    Eigen::VectorXd v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) {
      const auto& e = j.at(i);
      v(static_cast<Eigen::Index>(i)) =
          e.is_string() ? Scalar::parse(e.get<std::string>()).to_double() : e.get<double>();
    }
    return v;
  });
}

}  // namespace

Json to_json(const Vec& v) {
  Json j = Json::array();
  for (const auto& s : v) j.push_back(s.to_string());
  return j;
}

Vec vec_from_json(const Json& j) {
  return guarded([&] {
    Vec v;
    for (const auto& e : j) v.push_back(Scalar::parse(e.get<std::string>()));
    return v;
  });
}

Json to_json(const ExactMatrix& m) {
  Json j = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) j.push_back(to_json(m.row(i)));
  return j;
}

ExactMatrix exact_matrix_from_json(const Json& j) {
  std::vector<Vec> rows;
  for (const auto& r : j) rows.push_back(vec_from_json(r));
  return ExactMatrix::from_rows(rows);
}

Json to_json(const Quadric& q) {
  return Json{{"A", to_json(q.a)}, {"b", to_json(q.b)}, {"c", q.c.to_string()}};
}

Quadric quadric_from_json(const Json& j) {
  return guarded([&] {
    return Quadric{exact_matrix_from_json(j.at("A")), vec_from_json(j.at("b")),
                   Scalar::parse(j.at("c").get<std::string>())};
  });
}

Json to_json(const CenterCertificate& c) {
  Json j{{"verdict", verdict_name(c.verdict)},
         {"method", method_name(c.method)},
         {"dimension", c.dimension},
         {"points_used", c.points_used}};
  j["quadric_space_dim"] = c.quadric_space_dim ? Json(*c.quadric_space_dim) : Json(nullptr);
  j["witness"] = c.witness ? to_json(*c.witness) : Json(nullptr);
  if (!c.hyperplane_ranks.empty()) j["hyperplane_ranks"] = c.hyperplane_ranks;
  return j;
}

Json to_json(const OrbitCertification& c) {
  return Json{{"orbit_size", c.orbit_size},
              {"concordant", c.concordant()},
              {"certificates",
               Json::array({to_json(c.symmetric_span), to_json(c.midpoint_affine),
                            to_json(c.nullspace)})}};
}

Json to_json(const StratumReport& s) {
  return Json{{"family", family_name(s.mtype.family.family)},
              {"rank", s.mtype.family.rank},
              {"n0", s.mtype.n0},
              {"parts", s.mtype.parts},
              {"codim", s.codim},
              {"generic", s.generic}};
}

Json to_json(const RandersData& d) {
  return Json{{"mode", "exact"},
              {"A", to_json(d.alpha_gram)},
              {"B", to_json(d.bi_gram)},
              {"V", to_json(d.v_bi)}};
}

Json to_json(const NumericRanders& d) {
  auto mat = [](const Eigen::MatrixXd& m) {
    Json j = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      Json row = Json::array();
      for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
      j.push_back(row);
    }
    return j;
  };
  Json v = Json::array();
  for (Eigen::Index i = 0; i < d.v_bi.size(); ++i) v.push_back(d.v_bi(i));
  return Json{{"mode", "float"}, {"A", mat(d.alpha_gram)}, {"B", mat(d.bi_gram)}, {"V", v}};
}

NumericRanders numeric_randers_from_json(const Json& j) {
  const std::string mode = guarded([&] { return j.at("mode").get<std::string>(); });
  if (mode == "exact") return to_numeric(randers_from_json(j));
  if (mode != "float") throw Error(ErrorCode::kParse, "unknown Randers mode '" + mode + "'");
  return make_numeric_randers(real_matrix_from_json(guarded([&] { return j.at("A"); })),
                              real_matrix_from_json(guarded([&] { return j.at("B"); })),
                              real_vector_from_json(guarded([&] { return j.at("V"); })));
}

RandersData randers_from_json(const Json& j) {
  return guarded([&] {
    if (j.at("mode").get<std::string>() != "exact")
      throw Error(ErrorCode::kParse, "expected mode \"exact\"");
    return make_randers(exact_matrix_from_json(j.at("A")), exact_matrix_from_json(j.at("B")),
                        vec_from_json(j.at("V")));
  });
}

Json to_json(const Eigen::MatrixXcd& m) {
  Json j = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k)
      row.push_back(Json::array({m(i, k).real(), m(i, k).imag()}));
    j.push_back(row);
  }
  return j;
}

Eigen::MatrixXcd complex_matrix_from_json(const Json& j) {
  return guarded([&] {
    const auto rows = static_cast<Eigen::Index>(j.size());
    const auto cols = rows ? static_cast<Eigen::Index>(j.at(0).size()) : 0;
    Eigen::MatrixXcd m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
      for (Eigen::Index k = 0; k < cols; ++k) {
        const auto& e = j.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(k));
        m(i, k) = {e.at(0).get<double>(), e.at(1).get<double>()};
      }
    return m;
  });
}

Json to_json(const VariationReport& r) {
  return Json{{"min", r.min}, {"max", r.max}, {"variation", r.variation}, {"samples", r.samples}};
}

Json to_json(const LemgeoResult& r) {
  return Json{{"t_prime", r.t_prime},
              {"x_prime", to_json(r.x_prime.m)},
              {"iterations", r.iterations},
              {"t_sequence", r.t_sequence},
              {"contraction_ratios", r.ratios},
              {"max_ratio", r.max_ratio},
              {"residual", r.residual}};
}

}  // namespace cwlab
