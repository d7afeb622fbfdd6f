#pragma once

// JSON forms of series, orders, expansions and dominant data.
//
// Series: {"dim": d, "trunc": N, "terms": [{"exp": [...], "coeff": c}]} with
// "trunc" omitted for exact polynomials. Exact coefficients are "p/q" or
// {"re": "p/q", "im": "p/q"}; float coefficients are {"re": x, "im": y} with
// x, y decimal strings (full precision) or JSON numbers.

#include "germsum/borel_laplace.hpp"
#include "germsum/gevrey.hpp"
#include "germsum/transforms.hpp"
#include "germsum/weierstrass.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <variant>

namespace germsum {

using Json = nlohmann::json;

/// Malformed input; `path` names the offending JSON location.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string path, const std::string& what)
      : std::runtime_error(path + ": " + what), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

using AnySeries = std::variant<Series<ExactScalar>, Series<Complex>>;

Json to_json(const ExactScalar& c);
Json to_json(const Complex& c);
Json to_json(const Series<ExactScalar>& s);
Json to_json(const Series<Complex>& s);
Json to_json(const AnySeries& s);
Json to_json(const MonomialOrder& order);
Json to_json(const PExpansion<ExactScalar>& e);
Json to_json(const PExpansion<Complex>& e);
Json to_json(const DominantData& data);
Json to_json(const NormSequence& ns);
Json to_json(const GevreyEstimate& est);
Json to_json(const SumResult& res);
Json to_json(const SingularDirectionReport& rep);

/// Float if any coefficient is a float (or "scalar" is "float"); exact otherwise.
AnySeries any_series_from_json(const Json& j, const std::string& path = "$");
/// Rejects float coefficients.
Series<ExactScalar> exact_series_from_json(const Json& j, const std::string& path = "$");
/// Promotes exact input.
Series<Complex> float_series_from_json(const Json& j, const std::string& path = "$");

MonomialOrder order_from_json(const Json& j, const std::string& path = "$");
PExpansion<ExactScalar> exact_expansion_from_json(const Json& j, const std::string& path = "$");
PExpansion<Complex> float_expansion_from_json(const Json& j, const std::string& path = "$");

/// Parses text, reporting syntax errors as ParseError.
Json parse_json_text(const std::string& text, const std::string& source);

}  // namespace germsum
