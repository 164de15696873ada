#pragma once

#include <json.hpp>

#include "hitreal/census.hpp"
#include "hitreal/counting.hpp"
#include "hitreal/homology.hpp"
#include "hitreal/monodromy.hpp"

namespace hitreal {

// All reports use nlohmann's default object (keys sorted), so dumps are
// byte-stable for identical inputs.
using Json = nlohmann::json;

Json to_json(const Rational& x);       // "3/2"
Json to_json(const ComplexQ& z);       // "1/2+3/2i"
Json to_json(const SpectralPoint& x);  // complex literal or "inf"
Json to_json(const Poly& p);           // {"coeffs": [...], "degree": d, "text": "..."}
Json to_json(const QuadDifferential& q);
Json to_json(const HyperellipticCurve& c);  // polynomial echo plus genus and root counts
Json to_json(const KleinInvariants& inv);
Json to_json(const SpectralInvariants& s);
Json to_json(const ComponentCount& cc);  // {"count": ..., "d": ..., "group": ...}
Json to_json(const OvalTrace& tr);
Json to_json(const ChainPresentation& pres);
Json to_json(const InvariantTuple& t);  // [n, a, n_plus, u_half]
Json to_json(const SearchBudget& b);
Json to_json(const Witness& w);
Json to_json(const CensusReport& rep);  // the full census report with witnesses

// Parses a curve polynomial from an expression string or a JSON value of the
// form {"coeffs": [...]}, {"roots": [...], "lc": ...}, or an expression
// string. Coefficients and roots accept numbers or rational literals.
Poly poly_from_json(const Json& spec);

}  // namespace hitreal
