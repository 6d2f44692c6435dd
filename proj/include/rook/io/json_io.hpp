#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"
#include "rook/exactmath/seqtable.hpp"
#include "rook/hypergeom/hypergeom.hpp"
#include "rook/ore/ore.hpp"
#include "rook/telescope/telescope.hpp"

namespace rook {

using Json = nlohmann::ordered_json;

// Malformed input files.
struct FormatError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

Json to_json(const SeqTable& s);
SeqTable seqtable_from_json(const Json& j);

// {"kind": "diff", "vars": [...], "terms": [{"exp": [...], "coeff": text}]};
// shift operators use "exp": [j] for S^-j and n-polynomial coefficients.
Json to_json(const DiffOp& op);
Json to_json(const RecOp& op);
DiffOp diffop_from_json(const Json& j);
RecOp recop_from_json(const Json& j);

Json to_json(const Certificate& c);
Certificate certificate_from_json(const Json& j);

Json to_json(const CheckReport& r);

// Canonical text: two-space indentation and a final newline.
std::string dump(const Json& j);
Json parse_json(const std::string& text);
std::string read_file(const std::filesystem::path& p);
void write_file(const std::filesystem::path& p, const std::string& text);

}  // namespace rook
