#pragma once

// JSON serialization for every file format the tool reads and writes.
// Object keys are emitted in sorted order, so identical inputs always give
// byte-identical files.

#include <string>

#include <json.hpp>

#include "orbicell/cog.hpp"
#include "orbicell/complex.hpp"
#include "orbicell/config.hpp"
#include "orbicell/covering.hpp"
#include "orbicell/gaction.hpp"
#include "orbicell/group.hpp"

namespace orbicell {

using Json = nlohmann::json;

Json load_json_file(const std::string& path);     // InvalidInput on parse errors
void save_json_file(const std::string& path, const Json& j);
std::string dump_json(const Json& j);             // stable two-space indentation

// {"cells":[{"id","dim"}...], "faces":[["big","small"]...]}
CellComplex complex_from_json(const Json& j, bool close = true, bool* closure_added = nullptr);
Json complex_to_json(const CellComplex& c);

// {"vertices":[...], "simplices":[[...]...]}
SimplicialComplex simplicial_from_json(const Json& j);
Json simplicial_to_json(const SimplicialComplex& s);

// {"order":n,"table":[[...]],"labels":[...]} or {"perm_gens":[[...]...],"degree":d}
FiniteGroup group_from_json(const Json& j, int max_order = 48);
Json group_to_json(const FiniteGroup& g);

// {"complex":{...},"groups":{cell:groupref...},"homs":{"big>small":[...]...},
//  "twists":{"big>mid>small":elem...},"group_defs":{name:group...}}
ComplexOfGroups cog_from_json(const Json& j, int max_order = 48);
Json cog_to_json(const ComplexOfGroups& c);

// {"gauge":{"big>small":elem...}} with identity defaults
Gauge gauge_from_json(const ComplexOfGroups& c, const Json& j);
Json gauge_to_json(const ComplexOfGroups& c, const Gauge& g);

// {"space":{...},"group":{...},"action":{"1":{"v":"w"...}...},"base_vertex":v}
GComplex gcomplex_from_json(const Json& j, int max_order = 48);
Json gcomplex_to_json(const GComplex& gc);

// {"cog":{...},"attach":{"id","dim","faces","group","homs","twists"}}
struct AttachFile {
  ComplexOfGroups cog;
  AttachSpec spec;
};
AttachFile attach_from_json(const Json& j, int max_order = 48);
Json attach_to_json(const ComplexOfGroups& c, const AttachSpec& spec);

Json cover_to_json(const CoverData& cd);
CoverData cover_from_json(const Json& j);

// Words over lowercase letters, inverses uppercase: "abA" = a b a^-1.
Word word_from_letters(const std::string& s, int num_generators);
std::string word_to_letters(const Word& w);

}  // namespace orbicell
