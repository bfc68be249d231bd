#pragma once

#include <string>

#include <json.hpp>

#include "slink/algebra.hpp"
#include "slink/braid.hpp"
#include "slink/superbraid.hpp"

namespace slink {

using Json = nlohmann::ordered_json;

// Raised on malformed input files; carries the parser's byte offset context.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Polynomial coefficients serialize as [exponent, coeff] pairs in integer
// mode (coeff as a JSON number when it fits 64 bits, decimal string
// otherwise) and [exponent, re, im] triples in complex mode, ascending by
// exponent. A d-scaled polynomial adds its "dpow" field.
Json poly_to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const Json& j);
Json dscaled_to_json(const DScaledPoly& p);
DScaledPoly dscaled_from_json(const Json& j);

Json braid_to_json(const BraidWord& w);
BraidWord braid_from_json(const Json& j);

// Defaults applied to fields a superbraid JSON omits: gate angles, the
// statistics selector, and (when the file has no "mu") the Kauffman angle.
struct SuperbraidDefaults {
  std::optional<double> mu;
  double zeta = 0.0;
  double xi = 0.0;
  int delta = 1;
};

// {"qubits": Q, "mu": mu, "gates": [{"pos","sign","zeta","xi","delta"},...]}
Json superbraid_to_json(const SuperbraidWord& w);
SuperbraidWord superbraid_from_json(const Json& j, int a_branch = +1,
                                    const SuperbraidDefaults& defaults = {});
SuperbraidWord parse_superbraid(const std::string& text, int a_branch = +1,
                                const SuperbraidDefaults& defaults = {});

Json invariant_to_json(const LinkInvariantResult& r);
Json superposition_to_json(const BraidSuperposition& red);
Json superlink_to_json(const SuperlinkInvariant& inv, Cx a_value);
Json report_to_json(const std::vector<RelationReport>& reports);

}  // namespace slink
