#include "qdg/json_io.hpp"

#include <algorithm>
#include <map>

#include "qdg/canonical.hpp"

namespace qdg {

  namespace {
    [[noreturn]] void bad(std::string const& where, std::string const& what) {
      throw Error("bad_json", what, where);
    }

    Json const& field(Json const& j, char const* key, std::string const& where) {
      if (!j.is_object() || !j.contains(key)) {
        bad(where, std::string("missing field '") + key + "'");
      }
      return j.at(key);
    }

    template <typename T>
    std::vector<T> uint_list(Json const& j, std::string const& where) {
      if (!j.is_array()) {
        bad(where, "expected an array");
      }
      std::vector<T> out;
      for (auto const& v : j) {
        if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
          bad(where, "expected nonnegative integers");
        }
        out.push_back(v.get<T>());
      }
      return out;
    }

    bool single_char_alphabet(Presentation const& p) {
      return std::all_of(p.alphabet().begin(), p.alphabet().end(),
                         [](Generator const& g) { return g.name.size() == 1; });
    }

    Json side_json(Word const& w, bool compact) {
      if (compact) {
        return to_string(w);
      }
      Json arr = Json::array();
      for (auto const& g : w) {
        arr.push_back(g.name);
      }
      return arr;
    }

    Word side_from_json(Json const& j, std::string const& where) {
      if (j.is_string()) {
        return word_from_chars(j.get<std::string>());
      }
      if (!j.is_array()) {
        bad(where, "relation side must be a string or an array of names");
      }
      Word w;
      for (auto const& g : j) {
        if (!g.is_string()) {
          bad(where, "generator names must be strings");
        }
        w.push_back({g.get<std::string>()});
      }
      return w;
    }
  }  // namespace

  Json parse_json(std::string const& text, std::string const& location) {
    try {
      return Json::parse(text);
    } catch (nlohmann::json::parse_error const& e) {
      throw Error("parse_error", e.what(), location);
    }
  }

  Json to_json(Presentation const& p) {
    bool const compact = single_char_alphabet(p);
    Json gens = Json::array();
    for (auto const& g : p.alphabet()) {
      gens.push_back(g.name);
    }
    Json rels = Json::array();
    for (auto const& r : p.relations()) {
      rels.push_back(Json::array({side_json(r.lhs, compact), side_json(r.rhs, compact)}));
    }
    return Json{{"generators", gens}, {"relations", rels}};
  }

  PresentationPtr presentation_from_json(Json const& j) {
    std::vector<Generator> alphabet;
    auto const& gens = field(j, "generators", "/presentation");
    if (!gens.is_array()) {
      bad("/presentation/generators", "expected an array of names");
    }
    for (auto const& g : gens) {
      if (!g.is_string()) {
        bad("/presentation/generators", "generator names must be strings");
      }
      alphabet.push_back({g.get<std::string>()});
    }
    std::vector<Relation> relations;
    auto const& rels = field(j, "relations", "/presentation");
    if (!rels.is_array()) {
      bad("/presentation/relations", "expected an array of [lhs, rhs] pairs");
    }
    for (std::size_t i = 0; i < rels.size(); ++i) {
      auto where = "/presentation/relations/" + std::to_string(i);
      if (!rels[i].is_array() || rels[i].size() != 2) {
        bad(where, "expected [lhs, rhs]");
      }
      relations.push_back({side_from_json(rels[i][0], where), side_from_json(rels[i][1], where)});
    }
    Presentation p(std::move(alphabet), std::move(relations));
    auto problems = validate(p);
    if (!problems.empty()) {
      throw Error(problems.front().code, problems.front().message, "/presentation");
    }
    if (p == *qv_presentation()) {
      return qv_presentation();
    }
    if (p == *v_presentation()) {
      return v_presentation();
    }
    return std::make_shared<Presentation const>(std::move(p));
  }

  Json to_json(Diagram const& d) {
    Json wires = Json::array();
    for (std::size_t i = 0; i < d.labels.size(); ++i) {
      wires.push_back(Json{{"id", i}, {"label", d.presentation->generator(d.labels[i]).name}});
    }
    Json transistors = Json::array();
    for (std::size_t i = 0; i < d.transistors.size(); ++i) {
      auto const& t = d.transistors[i];
      transistors.push_back(Json{{"id", i}, {"top", t.top}, {"bottom", t.bottom}});
    }
    return Json{{"presentation", to_json(*d.presentation)},
                {"annular", d.annular},
                {"wires", wires},
                {"frame_top", d.frame_top},
                {"frame_bottom", d.frame_bottom},
                {"transistors", transistors}};
  }

  Diagram diagram_from_json(Json const& j) {
    Diagram d;
    d.presentation = presentation_from_json(field(j, "presentation", ""));
    if (j.contains("annular")) {
      if (!j.at("annular").is_boolean()) {
        bad("/annular", "expected a boolean");
      }
      d.annular = j.at("annular").get<bool>();
    }
    auto const& wires = field(j, "wires", "");
    if (!wires.is_array()) {
      bad("/wires", "expected an array of wires");
    }
    // wire ids are arbitrary distinct integers; a bare label string gets its index
    std::map<std::uint64_t, WireId> index;
    for (std::size_t i = 0; i < wires.size(); ++i) {
      auto where = "/wires/" + std::to_string(i);
      Json const& w = wires[i];
      std::uint64_t id = i;
      Json const* label = &w;
      if (w.is_object()) {
        auto const& idj = field(w, "id", where);
        if (!idj.is_number_unsigned() && !(idj.is_number_integer() && idj.get<long long>() >= 0)) {
          bad(where + "/id", "wire ids must be nonnegative integers");
        }
        id = idj.get<std::uint64_t>();
        label = &field(w, "label", where);
      }
      if (!label->is_string()) {
        bad(where, "wire labels must be strings");
      }
      auto l = d.presentation->letter({label->get<std::string>()});
      if (!l) {
        throw Error("unknown_letter", "wire label '" + label->get<std::string>() + "' is not a generator", where);
      }
      if (!index.emplace(id, static_cast<WireId>(i)).second) {
        bad(where + "/id", "duplicate wire id " + std::to_string(id));
      }
      d.labels.push_back(*l);
    }
    auto wire_list = [&](Json const& list, std::string const& where) {
      auto ids = uint_list<std::uint64_t>(list, where);
      std::vector<WireId> out;
      for (auto id : ids) {
        auto it = index.find(id);
        if (it == index.end()) {
          bad(where, "unknown wire id " + std::to_string(id));
        }
        out.push_back(it->second);
      }
      return out;
    };
    d.frame_top = wire_list(field(j, "frame_top", ""), "/frame_top");
    d.frame_bottom = wire_list(field(j, "frame_bottom", ""), "/frame_bottom");
    auto const& ts = field(j, "transistors", "");
    if (!ts.is_array()) {
      bad("/transistors", "expected an array");
    }
    for (std::size_t i = 0; i < ts.size(); ++i) {
      auto where = "/transistors/" + std::to_string(i);
      d.transistors.push_back({wire_list(field(ts[i], "top", where), where + "/top"),
                               wire_list(field(ts[i], "bottom", where), where + "/bottom")});
    }
    auto problems = validate_diagram(d);
    if (!problems.empty()) {
      throw Error("invalid_diagram", problems.front().code + ": " + problems.front().message);
    }
    return d;
  }

  std::string serialize_diagram(Diagram const& d) {
    return to_json(canonical_form(d, CodeFlavor::full)).dump(2) + "\n";
  }

  Json to_json(TreePair const& tp) {
    auto const d1 = tp.t1.interior();
    auto const d2 = tp.t2.interior();
    Json f = Json::array();
    for (std::size_t i = 0; i < tp.f.size(); ++i) {
      f.push_back(Json::array({d1.at(i), d2.at(tp.f[i])}));
    }
    return Json{{"t1_leaves", tp.t1.leaves}, {"t2_leaves", tp.t2.leaves}, {"sigma", tp.sigma}, {"f", f}};
  }

  TreePair treepair_from_json(Json const& j) {
    auto leaves = [&](char const* key) {
      auto const& arr = field(j, key, "");
      if (!arr.is_array()) {
        bad(std::string("/") + key, "expected an array of 0/1 strings");
      }
      std::vector<std::string> out;
      for (auto const& v : arr) {
        if (!v.is_string()) {
          bad(std::string("/") + key, "leaves must be strings");
        }
        out.push_back(v.get<std::string>());
      }
      return FiniteBinaryTree::from_leaves(std::move(out));
    };
    auto const t1_given = field(j, "t1_leaves", "");
    auto const t2_given = field(j, "t2_leaves", "");
    TreePair tp;
    tp.t1 = leaves("t1_leaves");
    tp.t2 = leaves("t2_leaves");
    auto sorted_index = [](FiniteBinaryTree const& t, Json const& given, std::size_t i) {
      auto leaf = given.at(i).get<std::string>();
      if (leaf == "e" || leaf == "ε") {
        leaf.clear();
      }
      return static_cast<std::size_t>(std::lower_bound(t.leaves.begin(), t.leaves.end(), leaf) - t.leaves.begin());
    };
    // sigma refers to the leaves in the order given
    auto sigma = uint_list<std::size_t>(field(j, "sigma", ""), "/sigma");
    if (sigma.size() != tp.t1.leaves.size()) {
      throw Error("bad_sigma", "sigma must have one entry per leaf", "/sigma");
    }
    tp.sigma.assign(sigma.size(), 0);
    for (std::size_t i = 0; i < sigma.size(); ++i) {
      if (sigma[i] >= t2_given.size()) {
        throw Error("bad_sigma", "sigma entry out of range", "/sigma/" + std::to_string(i));
      }
      tp.sigma[sorted_index(tp.t1, t1_given, i)] = sorted_index(tp.t2, t2_given, sigma[i]);
    }

    auto const d1 = tp.t1.interior();
    auto const d2 = tp.t2.interior();
    auto const& f = field(j, "f", "");
    if (!f.is_array() || f.size() != d1.size()) {
      throw Error("bad_f", "f must list one [domain, range] pair per interior node", "/f");
    }
    tp.f.assign(d1.size(), d2.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
      auto where = "/f/" + std::to_string(i);
      if (!f[i].is_array() || f[i].size() != 2 || !f[i][0].is_string() || !f[i][1].is_string()) {
        bad(where, "expected a [domain, range] pair of addresses");
      }
      auto from = parse_address(f[i][0].get<std::string>()).bits;
      auto to = parse_address(f[i][1].get<std::string>()).bits;
      auto a = std::lower_bound(d1.begin(), d1.end(), from);
      auto b = std::lower_bound(d2.begin(), d2.end(), to);
      if (a == d1.end() || *a != from || b == d2.end() || *b != to) {
        throw Error("bad_f", "f pairs must map interior nodes of t1 to interior nodes of t2", where);
      }
      tp.f[static_cast<std::size_t>(a - d1.begin())] = static_cast<std::size_t>(b - d2.begin());
    }
    auto problems = validate_treepair(tp);
    if (!problems.empty()) {
      throw Error(problems.front().code, problems.front().message);
    }
    return tp;
  }

  Json to_json(SimplicialComplex const& k) {
    Json dims = Json::array();
    for (int d = 0; d <= k.dimension(); ++d) {
      Json list = Json::array();
      for (std::size_t i = 0; i < k.count(d); ++i) {
        auto s = k.simplex(d, i);
        if (d == 0) {
          list.push_back(s[0]);
        } else {
          list.push_back(std::vector<VertexId>(s.begin(), s.end()));
        }
      }
      dims.push_back(std::move(list));
    }
    return Json{{"vertex_labels", k.labels()}, {"simplices_by_dim", dims}, {"stored_dimension", k.stored_dimension()}};
  }

  SimplicialComplex complex_from_json(Json const& j) {
    auto const& labels_json = field(j, "vertex_labels", "");
    if (!labels_json.is_array()) {
      bad("/vertex_labels", "expected an array");
    }
    std::vector<std::string> labels;
    for (auto const& l : labels_json) {
      labels.push_back(l.is_string() ? l.get<std::string>() : l.dump());
    }
    std::vector<Simplex> simplices;
    auto const& dims = field(j, "simplices_by_dim", "");
    if (!dims.is_array()) {
      bad("/simplices_by_dim", "expected an array of per-dimension lists");
    }
    for (std::size_t d = 0; d < dims.size(); ++d) {
      auto where = "/simplices_by_dim/" + std::to_string(d);
      if (!dims[d].is_array()) {
        bad(where, "expected an array");
      }
      for (auto const& s : dims[d]) {
        if (s.is_number()) {
          simplices.push_back({s.get<VertexId>()});
        } else {
          auto v = uint_list<VertexId>(s, where);
          if (v.size() != d + 1) {
            bad(where, "simplex has the wrong number of vertices");
          }
          simplices.push_back(std::move(v));
        }
      }
    }
    int cap = -1;
    if (j.contains("stored_dimension") && j.at("stored_dimension").is_number_integer()) {
      cap = j.at("stored_dimension").get<int>();
    }
    return SimplicialComplex::from_simplices(std::move(labels), simplices, cap);
  }

  namespace {
    Json big_json(BigInt const& v) {
      if (v <= std::numeric_limits<std::int64_t>::max()) {
        return static_cast<std::int64_t>(v);
      }
      return v.str();
    }
  }  // namespace

  Json to_json(HomologyReport const& r) {
    Json torsion = Json::array();
    for (auto const& t : r.torsion) {
      Json list = Json::array();
      for (auto const& v : t) {
        list.push_back(big_json(v));
      }
      torsion.push_back(std::move(list));
    }
    Json timings = Json::object();
    for (auto const& [name, ms] : r.timings_ms) {
      timings[name] = ms;
    }
    Json out{{"components", r.components},
             {"betti", r.betti},
             {"torsion", torsion},
             {"pi1", r.pi1 ? Json(to_string(*r.pi1)) : Json(nullptr)},
             {"caveat", r.caveat ? Json(*r.caveat) : Json(nullptr)},
             {"method", r.method},
             {"timings_ms", timings}};
    if (r.verdict) {
      out["verdict"] = *r.verdict ? "pass" : "fail";
    }
    return out;
  }

  Json error_json(Error const& e) {
    return Json{{"code", e.code()}, {"message", e.what()}, {"location", e.location()}};
  }

}  // namespace qdg
