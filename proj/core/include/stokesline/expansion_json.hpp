#ifndef STOKESLINE_EXPANSION_JSON_HPP
#define STOKESLINE_EXPANSION_JSON_HPP

#include <json.hpp>

#include "stokesline/expansions.hpp"

namespace stokesline::expansions {

// JSON with decimal-string numbers (never binary floats) so digits survive
// a round trip.
inline nlohmann::json to_json(const BigComplex& z, long digits) {
  return {{"re", z.re.to_sci(digits)}, {"im", z.im.to_sci(digits)}};
}

inline nlohmann::json to_json(const ExpansionResult& r, long digits, Precision p) {
  nlohmann::json j;
  j["M"] = r.M;
  j["m_o"] = r.trunc.m_o;
  j["alpha"] = r.trunc.alpha.to_sci(digits);
  j["x_scale"] = r.trunc.x_scale.to_sci(digits);
  j["dominant"] = to_json(r.dominant, digits);
  j["subdominant"] = to_json(r.subdominant, digits);
  j["total"] = to_json(r.total(p), digits);
  nlohmann::json td = nlohmann::json::array();
  for (const auto& t : r.terms_dominant) td.push_back(to_json(t, digits));
  j["terms_dominant"] = std::move(td);
  nlohmann::json ts = nlohmann::json::array();
  for (const auto& t : r.terms_sub) ts.push_back(to_json(t, digits));
  j["terms_sub"] = std::move(ts);
  if (r.brace) j["stokes_multiplier"] = to_json(*r.brace, digits);
  return j;
}

} // namespace stokesline::expansions

#endif
