#pragma once

#include "thetainv/exact_matrix.hpp"
#include "thetainv/group_rep.hpp"
#include "thetainv/laurent.hpp"
#include "thetainv/scalar.hpp"
#include "thetainv/sl2.hpp"
#include "thetainv/surgery.hpp"
#include "thetainv/theta_spaces.hpp"

#include "json.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

namespace thetainv::io {

/* insertion-ordered so emitted key order is under our control */
using json = nlohmann::ordered_json;

/* a structurally invalid document; `where` is a JSON-pointer-ish path */
struct schema_error : std::runtime_error {
    schema_error(const std::string& where, const std::string& what)
        : std::runtime_error("at " + (where.empty() ? std::string("/") : where) + ": " + what) {}
};

/* parse raw text, rethrowing tokenizer failures as schema_error with the
   byte offset nlohmann reports */
json parse_text(const std::string& text);
/* canonical rendering used by every command: 2-space indent, sorted-as-built */
std::string dumps(const json& j);

json to_json(const Scalar& s);
json to_json(const LaurentPoly& p);
json to_json(const TriLaurent& p);
json to_json(const ThetaClass& c);
json to_json(const SThetaElt& x);
json to_json(const TensorSq& t);
json to_json(const SU2Matrix& m);
json to_json(const ExactMatrix& m);
json to_json(const GroupPresentation& pres);
json to_json(const RepSelector& sel);
json to_json(const EdgeDecoration& e);
json to_json(const SurgerySpec& spec);
json to_json(const SurgeryValue& v);
json to_json(const Certificate& cert);

Scalar scalar_from_json(const json& j, const std::string& where = "");
LaurentPoly laurent_from_json(const json& j, const std::string& where = "");
TriLaurent trilaurent_from_json(const json& j, const std::string& where = "");
ThetaClass theta_class_from_json(const json& j, const std::string& where = "");
SThetaElt stheta_from_json(const json& j, const std::string& where = "");
TensorSq tensor_sq_from_json(const json& j, const std::string& where = "");
SU2Matrix su2_from_json(const json& j, const std::string& where = "");
ExactMatrix matrix_from_json(const json& j, const std::string& where = "");
GroupPresentation presentation_from_json(const json& j, const std::string& where = "");
RepSelector rep_selector_from_json(const json& j, const std::string& where = "");
EdgeDecoration edge_from_json(const json& j, const std::string& where = "");
SurgerySpec surgery_spec_from_json(const json& j, const std::string& where = "");
Certificate certificate_from_json(const json& j, const std::string& where = "");

std::uint64_t fnv1a64(const std::string& text);
/* 16 lowercase hex digits over the canonical serialized presentation */
std::string presentation_hash(const GroupPresentation& pres);

}  // namespace thetainv::io
