#include "melon/serialize.hpp"

#include "melon/errors.hpp"

namespace melon {

namespace {

Json tableau_to_json(const Tableau& t) {
  Json rows = Json::array();
  for (const auto& r : t.rows) rows.push_back(r);
  return rows;
}

Tableau tableau_from_json(const Json& j) {
  Tableau t;
  for (const auto& r : j) t.rows.push_back(r.get<std::vector<int>>());
  return t;
}

template <typename T>
T required(const Json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("field '") + key + "': " + e.what());
  }
}

}  // namespace

Json poly_to_json(const LaurentPoly& p) {
  Json out = Json::array();
  for (const auto& t : p.terms()) out.push_back(Json::array({t.exp, t.coef.get_str()}));
  return out;
}

LaurentPoly poly_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("polynomial must be a JSON array");
  std::vector<LaurentPoly::Term> terms;
  for (const auto& item : j) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() || !item[1].is_string()) {
      throw ParseError("polynomial term must be [exponent, \"coefficient\"]");
    }
    const auto exp = item[0].get<Exponent>();
    if (!terms.empty() && exp <= terms.back().exp) throw ParseError("polynomial exponents must increase strictly");
    const auto text = item[1].get<std::string>();
    BigInt coef;
    if (text.empty() || coef.set_str(text, 10) != 0 || coef.get_str() != text) {
      throw ParseError("bad coefficient '" + text + "'");
    }
    if (coef == 0) throw ParseError("zero coefficient in polynomial");
    terms.push_back({exp, std::move(coef)});
  }
  return LaurentPoly::from_terms(std::move(terms));
}

std::string serialize_poly(const LaurentPoly& p) { return poly_to_json(p).dump(); }

LaurentPoly parse_poly(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed polynomial JSON: ") + e.what());
  }
  return poly_from_json(j);
}

Json watermelon_to_json(const Watermelon& w) {
  Json out;
  out["N"] = w.n;
  out["M"] = w.m;
  out["k"] = w.k;
  out["lambda"] = w.lambda.parts();
  out["c_steps"] = w.c_nest().line_steps();
  out["b_steps"] = w.b_nest().line_steps();
  out["volume"] = w.volume();
  out["c_tableau"] = tableau_to_json(w.c_tableau);
  out["b_tableau"] = tableau_to_json(w.b_tableau);
  return out;
}

Watermelon watermelon_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("watermelon must be a JSON object");
  const auto n = required<std::size_t>(j, "N");
  const int m = required<int>(j, "M");
  const auto k = required<std::size_t>(j, "k");
  if (m < 0 || k > n) throw ParseError("watermelon parameters out of range");
  Partition lambda;
  try {
    lambda = Partition(required<std::vector<int>>(j, "lambda"));
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("lambda: ") + e.what());
  }
  if (lambda.size() != n || !lambda.fits_in_box(n - k, m)) throw ParseError("lambda does not fit the watermelon");

  std::optional<Watermelon> found;
  if (j.contains("c_tableau") && j.contains("b_tableau")) {
    try {
      found = Watermelon{n, m, k, lambda, tableau_from_json(j.at("c_tableau")), tableau_from_json(j.at("b_tableau"))};
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("tableau: ") + e.what());
    }
    if (!found->is_valid()) throw ParseError("tableaux do not describe a valid watermelon");
  } else {
    const auto c_steps = required<std::vector<int>>(j, "c_steps");
    const auto b_steps = required<std::vector<int>>(j, "b_steps");
    for (const auto& c : ssyt_list(lambda, static_cast<int>(k) + 1, static_cast<int>(n))) {
      if (nest_from_tableau(c, n).line_steps() != c_steps) continue;
      for (const auto& b : ssyt_list(lambda.complement(n, m), 1, static_cast<int>(n))) {
        if (bnest_from_tableau(b, lambda, n, m).line_steps() == b_steps) {
          found = Watermelon{n, m, k, lambda, c, b};
          break;
        }
      }
      if (found) break;
    }
    if (!found) throw ParseError("no watermelon matches lambda, c_steps and b_steps");
  }
  if (j.contains("c_steps") && required<std::vector<int>>(j, "c_steps") != found->c_nest().line_steps()) {
    throw ParseError("c_steps disagree with the tableau");
  }
  if (j.contains("b_steps") && required<std::vector<int>>(j, "b_steps") != found->b_nest().line_steps()) {
    throw ParseError("b_steps disagree with the tableau");
  }
  if (j.contains("volume") && required<long>(j, "volume") != found->volume()) {
    throw ParseError("volume disagrees with the paths");
  }
  return *found;
}

Json plane_partition_to_json(const PlanePartition& pi, std::size_t n, std::size_t l, int m) {
  Json out;
  out["N"] = n;
  out["L"] = l;
  out["M"] = m;
  Json rows = Json::array();
  for (std::size_t i = 0; i < pi.rows(); ++i) {
    std::vector<int> row(pi.parts().begin() + static_cast<long>(i * pi.cols()),
                         pi.parts().begin() + static_cast<long>((i + 1) * pi.cols()));
    rows.push_back(row);
  }
  out["parts"] = rows;
  out["volume"] = pi.volume();
  return out;
}

BoxedPlanePartition plane_partition_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("plane partition must be a JSON object");
  BoxedPlanePartition out;
  out.n = required<std::size_t>(j, "N");
  out.l = required<std::size_t>(j, "L");
  out.m = required<int>(j, "M");
  const auto rows = required<std::vector<std::vector<int>>>(j, "parts");
  if (out.m < 0) throw ParseError("box height must be nonnegative");
  if (rows.size() > out.l) throw ParseError("more rows than L");
  // Rows may be ragged or short; missing entries are zero.
  std::vector<int> parts(out.l * out.n, 0);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() > out.n) throw ParseError("row longer than N");
    for (std::size_t c = 0; c < rows[i].size(); ++c) parts[i * out.n + c] = rows[i][c];
  }
  try {
    out.pi = PlanePartition(out.l, out.n, std::move(parts));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
  if (!out.pi.fits_box(out.n, out.l, out.m)) throw ParseError("parts exceed the box height M");
  if (j.contains("volume") && required<long>(j, "volume") != out.pi.volume()) {
    throw ParseError("volume disagrees with the parts");
  }
  return out;
}

}  // namespace melon
