#pragma once

#include <json.hpp>
#include <string>

#include "qdg/diagram.hpp"
#include "qdg/error.hpp"
#include "qdg/presentation.hpp"
#include "qdg/qv.hpp"
#include "qdg/simplicial.hpp"
#include "qdg/topology.hpp"

namespace qdg {

  using Json = nlohmann::json;

  // Throws Error("parse_error") with `location` naming the source.
  Json parse_json(std::string const& text, std::string const& location);

  // {"generators": [...], "relations": [[lhs, rhs], ...]}; a side is a
  // string of letters when every generator name is one character, an array
  // of names otherwise (both accepted on input).
  Json to_json(Presentation const& p);
  PresentationPtr presentation_from_json(Json const& j);

  // {"presentation", "annular", "wires": [{"id", "label"}], "frame_top",
  //  "frame_bottom", "transistors": [{"id", "top": [...], "bottom": [...]}]}
  // Lists refer to wire ids. On output ids are indices; on input any distinct
  // ids work, and a bare label string stands for {"id": index, "label": ...}.
  Json to_json(Diagram const& d);
  // Validates; throws Error("invalid_diagram") or Error("bad_json").
  Diagram diagram_from_json(Json const& j);
  // Canonical representative, two-space indent, trailing newline.
  std::string serialize_diagram(Diagram const& d);

  // {"t1_leaves", "t2_leaves", "sigma", "f": [[domain, range], ...]}
  Json to_json(TreePair const& tp);
  TreePair treepair_from_json(Json const& j);

  // {"vertex_labels", "simplices_by_dim", "stored_dimension"}
  Json to_json(SimplicialComplex const& k);
  SimplicialComplex complex_from_json(Json const& j);

  Json to_json(HomologyReport const& r);

  // {"code", "message", "location"}
  Json error_json(Error const& e);

}  // namespace qdg
