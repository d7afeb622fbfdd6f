#include "germsum/json_io.hpp"

#include <cmath>

namespace germsum {

namespace {

bool is_rational_text(const std::string& s) {
  if (s.empty()) return false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char ch = s[i];
    if ((ch == '-' || ch == '+') && i == 0) continue;
    if (ch != '/' && (ch < '0' || ch > '9')) return false;
  }
  return true;
}

struct Coeff {
  bool is_float = false;
  ExactScalar exact;
  Complex value;
};

// One real component: exact from "p/q", float from a number or decimal text.
void parse_component(const Json& j, const std::string& path, bool& is_float, Rational& q, Real& x) {
  if (j.is_number_integer()) {
    q = Rational(j.get<long long>());
    return;
  }
  if (j.is_number()) {
    is_float = true;
    x = Real(j.get<double>());
    return;
  }
  if (!j.is_string()) throw ParseError(path, "expected a number or a string coefficient");
  const std::string s = j.get<std::string>();
  if (is_rational_text(s)) {
    try {
      q = parse_rational(s);
    } catch (const std::exception& e) {
      throw ParseError(path, e.what());
    }
    return;
  }
  try {
    std::size_t used = 0;
    (void)std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    x = Real(s);
  } catch (const std::exception&) {
    throw ParseError(path, "not a rational or decimal number: '" + s + "'");
  }
  is_float = true;
}

Coeff parse_coeff(const Json& j, const std::string& path) {
  Coeff c;
  Rational re, im;
  Real fre, fim;
  bool re_float = false, im_float = false;
  if (j.is_object()) {
    if (!j.contains("re")) throw ParseError(path, "complex coefficient needs \"re\"");
    parse_component(j.at("re"), path + ".re", re_float, re, fre);
    if (j.contains("im")) parse_component(j.at("im"), path + ".im", im_float, im, fim);
  } else {
    parse_component(j, path, re_float, re, fre);
  }
  c.is_float = re_float || im_float;
  if (c.is_float) {
    c.value = Complex(re_float ? fre : to_real(re), im_float ? fim : to_real(im));
  } else {
    c.exact = ExactScalar(re, im);
    c.value = to_complex(c.exact);
  }
  return c;
}

struct RawSeries {
  int dim = 0;
  int trunc = kUnbounded;
  bool is_float = false;
  std::vector<std::pair<ExponentVec, Coeff>> terms;
};

RawSeries parse_raw(const Json& j, const std::string& path) {
  if (!j.is_object()) throw ParseError(path, "series must be a JSON object");
  RawSeries raw;
  if (!j.contains("dim") || !j.at("dim").is_number_integer()) throw ParseError(path + ".dim", "missing integer dimension");
  raw.dim = j.at("dim").get<int>();
  if (raw.dim < 1) throw ParseError(path + ".dim", "dimension must be >= 1");
  if (j.contains("trunc") && !j.at("trunc").is_null()) {
    const Json& t = j.at("trunc");
    if (t.is_string() && (t.get<std::string>() == "inf" || t.get<std::string>() == "exact")) {
      raw.trunc = kUnbounded;
    } else if (t.is_number_integer()) {
      raw.trunc = std::max(-1, static_cast<int>(std::min<long long>(t.get<long long>(), kUnbounded)));
    } else {
      throw ParseError(path + ".trunc", "truncation must be an integer");
    }
  }
  if (j.contains("scalar")) {
    const Json& s = j.at("scalar");
    if (!s.is_string() || (s != "float" && s != "exact")) throw ParseError(path + ".scalar", "expected \"exact\" or \"float\"");
    raw.is_float = s == "float";
  }
  if (!j.contains("terms")) return raw;
  const Json& terms = j.at("terms");
  if (!terms.is_array()) throw ParseError(path + ".terms", "terms must be an array");
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string tp = path + ".terms[" + std::to_string(i) + "]";
    const Json& t = terms[i];
    if (!t.is_object() || !t.contains("exp") || !t.contains("coeff")) throw ParseError(tp, "term needs \"exp\" and \"coeff\"");
    const Json& e = t.at("exp");
    if (!e.is_array() || static_cast<int>(e.size()) != raw.dim) {
      throw ParseError(tp + ".exp", "exponent must be an array of length " + std::to_string(raw.dim));
    }
    std::vector<int> ev;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (!e[k].is_number_integer() || e[k].get<long long>() < 0 || e[k].get<long long>() > 1000000) {
        throw ParseError(tp + ".exp[" + std::to_string(k) + "]", "exponent entries must be nonnegative integers");
      }
      ev.push_back(e[k].get<int>());
    }
    Coeff c = parse_coeff(t.at("coeff"), tp + ".coeff");
    raw.is_float = raw.is_float || c.is_float;
    raw.terms.emplace_back(ExponentVec(std::move(ev)), std::move(c));
  }
  return raw;
}

Series<ExactScalar> build_exact(const RawSeries& raw) {
  Series<ExactScalar> s(raw.dim, raw.trunc);
  for (const auto& [e, c] : raw.terms) s.add_term(e, c.exact);
  return s;
}

Series<Complex> build_float(const RawSeries& raw) {
  Series<Complex> s(raw.dim, raw.trunc);
  for (const auto& [e, c] : raw.terms) s.add_term(e, c.value);
  return s;
}

template <class S>
Json series_json(const Series<S>& s) {
  Json j;
  j["dim"] = s.dim();
  if (!s.exact()) j["trunc"] = s.trunc();
  if constexpr (!ScalarTraits<S>::is_exact) {
    j["scalar"] = "float";
    j["prec"] = current_precision_bits();
  }
  Json terms = Json::array();
  for (const auto& [e, c] : s.terms()) terms.push_back({{"exp", e.values()}, {"coeff", to_json(c)}});
  j["terms"] = std::move(terms);
  return j;
}

template <class S>
Json expansion_json(const PExpansion<S>& e) {
  Json j;
  j["germ"] = to_json(e.germ.series());
  j["order"] = to_json(e.germ.order());
  Json coeffs = Json::array();
  for (const auto& g : e.coeffs) coeffs.push_back(to_json(g));
  j["coeffs"] = std::move(coeffs);
  j["lead_exp"] = e.germ.lead_exp().values();
  auto t = [](int v) { return v >= kUnbounded ? Json("inf") : Json(v); };
  j["source_trunc"] = t(e.source_trunc);
  j["reconstruction_trunc"] = t(e.reconstruction_trunc);
  return j;
}

int trunc_field(const Json& j, const std::string& key, const std::string& path, int fallback) {
  if (!j.contains(key)) return fallback;
  const Json& v = j.at(key);
  if (v.is_string() && v == "inf") return kUnbounded;
  if (v.is_number_integer()) return v.get<int>();
  throw ParseError(path + "." + key, "expected an integer or \"inf\"");
}

template <class S, class F>
PExpansion<S> expansion_from(const Json& j, const std::string& path, F series_from) {
  if (!j.is_object() || !j.contains("germ") || !j.contains("order") || !j.contains("coeffs")) {
    throw ParseError(path, "expansion needs \"germ\", \"order\" and \"coeffs\"");
  }
  Series<S> p = series_from(j.at("germ"), path + ".germ");
  MonomialOrder order = order_from_json(j.at("order"), path + ".order");
  const Json& cj = j.at("coeffs");
  if (!cj.is_array()) throw ParseError(path + ".coeffs", "coeffs must be an array");
  std::vector<Series<S>> coeffs;
  for (std::size_t i = 0; i < cj.size(); ++i) coeffs.push_back(series_from(cj[i], path + ".coeffs[" + std::to_string(i) + "]"));
  try {
    PExpansion<S> out = make_expansion(BasicGerm<S>(std::move(p), std::move(order)), std::move(coeffs));
    out.source_trunc = trunc_field(j, "source_trunc", path, out.source_trunc);
    out.reconstruction_trunc = trunc_field(j, "reconstruction_trunc", path, out.reconstruction_trunc);
    return out;
  } catch (const DomainError& e) {
    throw ParseError(path, e.what());
  }
}

}  // namespace

Json to_json(const ExactScalar& c) {
  if (c.is_real()) return c.re.str();
  return {{"re", c.re.str()}, {"im", c.im.str()}};
}

Json to_json(const Complex& c) {
  return {{"re", real(c).str(0, std::ios_base::scientific)}, {"im", imag(c).str(0, std::ios_base::scientific)}};
}

Json to_json(const Series<ExactScalar>& s) { return series_json(s); }
Json to_json(const Series<Complex>& s) { return series_json(s); }
Json to_json(const AnySeries& s) {
  return std::visit([](const auto& v) { return to_json(v); }, s);
}

Json to_json(const MonomialOrder& order) {
  Json w = Json::array();
  for (const auto& q : order.weights()) w.push_back(q.str());
  return {{"weights", w}, {"tiebreak", to_string(order.tiebreak())}};
}

Json to_json(const PExpansion<ExactScalar>& e) { return expansion_json(e); }
Json to_json(const PExpansion<Complex>& e) { return expansion_json(e); }

Json to_json(const DominantData& data) {
  Json j;
  j["h"] = data.h;
  Json H = Json::array();
  for (const auto& [e, c] : data.H.terms()) {
    Json coeff = to_json(c);
    H.push_back({e[0], e[1], coeff.is_string() ? coeff : Json(to_string(c))});
  }
  j["H"] = std::move(H);
  j["a"] = data.a;
  Json roots = Json::array();
  for (const auto& r : data.roots) {
    std::string value = r.infinite ? "inf" : r.exact ? to_string(r.exact_value) : to_string(r.value, 20);
    roots.push_back({{"value", value}, {"mult", r.multiplicity}, {"exact", r.exact}});
  }
  j["roots"] = std::move(roots);
  if (data.completed_order) j["completed_order"] = to_json(*data.completed_order);
  return j;
}

Json to_json(const NormSequence& ns) {
  Json norms = Json::array(), logs = Json::array();
  for (std::size_t n = 0; n < ns.size(); ++n) {
    logs.push_back(ns.zero_mask[n] ? Json(nullptr) : Json(ns.log_norms[n]));
    double v = ns.norm(n);
    norms.push_back(std::isfinite(v) ? Json(v) : Json(nullptr));
  }
  return {{"rho", ns.rho}, {"norms", norms}, {"log_norms", logs}, {"zero_mask", ns.zero_mask}};
}

Json to_json(const GevreyEstimate& est) {
  return {{"s", est.s},
          {"k", est.s > 0 ? Json(1.0 / est.s) : Json(nullptr)},
          {"logK", est.logK},
          {"logA", est.logA},
          {"raw_s", est.raw_s},
          {"rms_residual", est.rms_residual},
          {"convergent_type", est.convergent_type},
          {"n_range", {est.n_first, est.n_last}},
          {"points", est.points}};
}

Json to_json(const SumResult& res) {
  Json j{{"t", to_json(res.t)},
         {"k", res.k},
         {"theta", res.theta},
         {"value", to_json(res.value)},
         {"quadrature_error", res.quadrature_error.convert_to<double>()},
         {"continuation_error", res.continuation_error.convert_to<double>()},
         {"total_error", res.total_error().convert_to<double>()},
         {"tail_cut", res.tail_cut.convert_to<double>()},
         {"method", to_string(res.method)}};
  if (res.derivative) j["derivative"] = to_json(*res.derivative);
  return j;
}

Json to_json(const SingularDirectionReport& rep) {
  Json poles = Json::array();
  for (const auto& p : rep.poles) {
    poles.push_back({{"center", to_json(p.center)}, {"modulus", p.modulus}, {"argument", p.argument}, {"stability", p.stability}});
  }
  return {{"k", rep.k}, {"orders", rep.orders}, {"poles", poles}, {"directions", rep.directions}, {"t_period", rep.t_period}};
}

AnySeries any_series_from_json(const Json& j, const std::string& path) {
  RawSeries raw = parse_raw(j, path);
  if (raw.is_float) return build_float(raw);
  return build_exact(raw);
}

Series<ExactScalar> exact_series_from_json(const Json& j, const std::string& path) {
  RawSeries raw = parse_raw(j, path);
  if (raw.is_float) throw ParseError(path, "exact (rational) coefficients required");
  return build_exact(raw);
}

Series<Complex> float_series_from_json(const Json& j, const std::string& path) {
  return build_float(parse_raw(j, path));
}

MonomialOrder order_from_json(const Json& j, const std::string& path) {
  if (j.is_string()) {
    try {
      return MonomialOrder::parse(j.get<std::string>());
    } catch (const std::exception& e) {
      throw ParseError(path, e.what());
    }
  }
  if (!j.is_object() || !j.contains("weights") || !j.at("weights").is_array()) {
    throw ParseError(path, "order needs a \"weights\" array");
  }
  std::vector<Rational> weights;
  const Json& w = j.at("weights");
  for (std::size_t i = 0; i < w.size(); ++i) {
    const std::string wp = path + ".weights[" + std::to_string(i) + "]";
    try {
      if (w[i].is_number_integer()) weights.emplace_back(w[i].get<long long>());
      else if (w[i].is_string()) weights.push_back(parse_rational(w[i].get<std::string>()));
      else throw std::invalid_argument("weight must be an integer or \"p/q\"");
    } catch (const std::exception& e) {
      throw ParseError(wp, e.what());
    }
  }
  TieBreak tb = TieBreak::Lex;
  if (j.contains("tiebreak")) {
    try {
      tb = parse_tiebreak(j.at("tiebreak").get<std::string>());
    } catch (const std::exception& e) {
      throw ParseError(path + ".tiebreak", e.what());
    }
  }
  try {
    return MonomialOrder(std::move(weights), tb);
  } catch (const std::exception& e) {
    throw ParseError(path + ".weights", e.what());
  }
}

PExpansion<ExactScalar> exact_expansion_from_json(const Json& j, const std::string& path) {
  return expansion_from<ExactScalar>(j, path, [](const Json& s, const std::string& p) { return exact_series_from_json(s, p); });
}

PExpansion<Complex> float_expansion_from_json(const Json& j, const std::string& path) {
  return expansion_from<Complex>(j, path, [](const Json& s, const std::string& p) { return float_series_from_json(s, p); });
}

Json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(source, std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace germsum
