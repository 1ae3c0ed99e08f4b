#pragma once

#include "pkroots/group_ctx.hpp"

// vendored single-header nlohmann/json
#include "json.hpp"

namespace pkroots {

using ordered_json = nlohmann::ordered_json;

// Parse a group spec document. Rejections carry field-anchored diagnostics
// like "generators[1][0][2]: expected an integer or a 'p/q' string".
GroupSpec parse_group_spec(const ordered_json& doc);
GroupSpec load_group_spec(const std::string& path);

// Lossless serialization (parse(serialize(s)) == s).
ordered_json serialize_group_spec(const GroupSpec& spec);

// Scalar <-> JSON helpers shared by spec and certificate files. All numeric
// I/O is exact: integers or "p/q" strings, never floats.
Scalar scalar_from_json(const Field& f, const ordered_json& v, const std::string& where);
ordered_json scalar_to_json(const Scalar& s);
Matrix matrix_from_json(const Field& f, const ordered_json& v, const std::string& where);
ordered_json matrix_to_json(const Matrix& m);
ordered_json vec_to_json(const Vec& v);
Vec vec_from_json(const Field& f, const ordered_json& v, const std::string& where);

} // namespace pkroots
