#include "acta/io.hpp"

#include <fstream>  // for ifstream, ofstream
#include <sstream>  // for ostringstream

namespace acta::io {

  namespace {
    [[noreturn]] void parse_error(std::string const& msg) {
      throw Error(ErrorKind::Parse, msg);
    }

    json const& field(json const& j, char const* key) {
      if (!j.is_object()) {
        parse_error("expected an object");
      }
      auto it = j.find(key);
      if (it == j.end()) {
        parse_error(std::string("missing field \"") + key + "\"");
      }
      return *it;
    }

    std::size_t size_field(json const& j, char const* key) {
      auto const& v = field(j, key);
      if (!v.is_number_integer() || v.get<long long>() < 0) {
        parse_error(std::string("field \"") + key + "\" must be a non-negative integer");
      }
      return v.get<std::size_t>();
    }

    Table table_field(json const& j, char const* key, std::size_t rows, std::size_t cols) {
      auto const& v = field(j, key);
      if (!v.is_array()) {
        parse_error(std::string("field \"") + key + "\" must be an array of rows");
      }
      if (v.size() != rows) {
        parse_error(std::string("field \"") + key + "\" has " + std::to_string(v.size())
                    + " rows, expected " + std::to_string(rows));
      }
      Table result;
      for (std::size_t r = 0; r < rows; ++r) {
        auto const& row = v[r];
        if (!row.is_array() || row.size() != cols) {
          parse_error(std::string("row ") + std::to_string(r) + " of \"" + key
                      + "\" must have " + std::to_string(cols) + " entries");
        }
        std::vector<index_t> out;
        for (auto const& x : row) {
          if (!x.is_number_integer() || x.get<long long>() < 0
              || x.get<long long>() >= static_cast<long long>(UNDEFINED)) {
            parse_error(std::string("entries of \"") + key
                        + "\" must be non-negative integers");
          }
          out.push_back(x.get<index_t>());
        }
        result.push_back(std::move(out));
      }
      return result;
    }

    std::vector<std::string> names_field(json const& j, std::size_t count) {
      auto it = j.find("names");
      if (it == j.end() || it->is_null()) {
        return {};
      }
      if (!it->is_array() || it->size() != count) {
        parse_error("\"names\" must be an array with one string per element");
      }
      std::vector<std::string> names;
      for (auto const& x : *it) {
        if (!x.is_string()) {
          parse_error("\"names\" must contain strings");
        }
        names.push_back(x.get<std::string>());
      }
      return names;
    }

    json table_json(Table const& t) {
      json result = json::array();
      for (auto const& row : t) {
        result.push_back(row);
      }
      return result;
    }

    json names_of(Act const& A, std::vector<index_t> const& elements) {
      json result = json::array();
      for (auto a : elements) {
        result.push_back(A.name(a));
      }
      return result;
    }

    json optional_subact(std::optional<Subact> const& B, Act const& A) {
      return B ? to_json(*B, A) : json(nullptr);
    }

    json subact_list(std::vector<Subact> const& list, Act const& A) {
      json result = json::array();
      for (auto const& B : list) {
        result.push_back(to_json(B, A));
      }
      return result;
    }

  }  // namespace

  Monoid monoid_from_json(json const& j) {
    std::size_t const n = size_field(j, "n");
    if (n == 0) {
      parse_error("a monoid has at least one element");
    }
    Table table = table_field(j, "table", n, n);
    return Monoid::from_table(table, names_field(j, n));
  }

  json to_json(Monoid const& M) {
    json result;
    result["n"]     = M.size();
    result["table"] = table_json(M.table());
    if (!M.names().empty()) {
      result["names"] = M.names();
    }
    return result;
  }

  Act act_from_json(json const& j, std::filesystem::path const& base) {
    auto const& mj = field(j, "monoid");
    Monoid      M  = mj.is_string() ? load_monoid(base / mj.get<std::string>())
                                    : monoid_from_json(mj);
    std::size_t const m = size_field(j, "m");
    if (m == 0) {
      parse_error("an act has at least one element");
    }
    Table action = table_field(j, "action", m, M.size());
    return Act::from_table(M, action, names_field(j, m));
  }

  json to_json(Act const& A) {
    json result;
    result["monoid"] = to_json(A.monoid());
    result["m"]      = A.size();
    result["action"] = table_json(A.table());
    if (!A.names().empty()) {
      result["names"] = A.names();
    }
    return result;
  }

  json read_json(std::filesystem::path const& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error(ErrorKind::Io, "cannot read " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
      return json::parse(buffer.str());
    } catch (json::parse_error const& e) {
      parse_error(path.string() + ": " + e.what());
    }
  }

  void write_json(std::filesystem::path const& path, json const& j) {
    std::ofstream out(path);
    if (!out) {
      throw Error(ErrorKind::Io, "cannot write " + path.string());
    }
    out << j.dump(2) << '\n';
    if (!out) {
      throw Error(ErrorKind::Io, "cannot write " + path.string());
    }
  }

  Monoid load_monoid(std::filesystem::path const& path) {
    return monoid_from_json(read_json(path));
  }

  Act load_act(std::filesystem::path const& path) {
    return act_from_json(read_json(path), path.parent_path());
  }

  bool is_act_document(json const& j) {
    return j.is_object() && j.contains("action");
  }

  Congruence congruence_from_json(Act const& A, json const& j) {
    auto const& v = field(j, "labels");
    if (!v.is_array()) {
      parse_error("\"labels\" must be an array");
    }
    std::vector<index_t> labels;
    for (auto const& x : v) {
      if (!x.is_number_integer() || x.get<long long>() < 0) {
        parse_error("\"labels\" must contain non-negative integers");
      }
      labels.push_back(x.get<index_t>());
    }
    return Congruence::from_partition(A, labels);
  }

  json to_json(Congruence const& theta) {
    json result;
    result["labels"] = theta.labels();
    return result;
  }

  json to_json(Subact const& B, Act const& A) {
    json result;
    result["elements"] = B.elements;
    result["names"]    = names_of(A, B.elements);
    return result;
  }

  json to_json(Hom const& h) {
    json result;
    result["map"]        = h.map;
    result["injective"]  = h.injective;
    result["surjective"] = h.surjective;
    return result;
  }

  json to_json(CogenerationWitness const& w) {
    json result;
    json family = json::array();
    for (auto const& h : w.family) {
      family.push_back(h.map);
    }
    result["family"]    = family;
    result["embedding"] = w.embedding;
    result["targets"]   = w.targets;
    return result;
  }

  json to_json(StructureReport const& r, Act const& A) {
    json result;
    result["socle"]                = optional_subact(r.socle, A);
    result["s_socle"]              = optional_subact(r.s_socle, A);
    result["radical"]              = optional_subact(r.radical, A);
    result["maximal_subacts"]      = subact_list(r.maximal_subacts, A);
    result["large_subacts"]        = subact_list(r.large_subacts, A);
    result["theta_simple_subacts"] = subact_list(r.theta_simple_subacts, A);
    return result;
  }

  json to_json(Classification const& c, Act const& A) {
    json result;
    result["faithful"] = c.faithful;
    if (c.cofaithful) {
      result["cofaithful"]       = true;
      result["cofaithful_n"]     = *c.cofaithful_n;
      result["cofaithful_set"]   = *c.cofaithful;
      result["cofaithful_names"] = names_of(A, *c.cofaithful);
    } else {
      result["cofaithful"]       = false;
      result["cofaithful_n"]     = nullptr;
      result["cofaithful_set"]   = nullptr;
      result["cofaithful_names"] = nullptr;
    }
    if (c.subgenerator) {
      result["subgenerator"]         = true;
      result["subgenerator_element"] = *c.subgenerator;
      result["subgenerator_name"]    = A.name(*c.subgenerator);
    } else {
      result["subgenerator"]         = false;
      result["subgenerator_element"] = nullptr;
      result["subgenerator_name"]    = nullptr;
    }
    result["generator"]                         = c.generator;
    result["subdirectly_irreducible"]           = c.subdirectly_irreducible;
    result["irreducible"]                       = c.irreducible;
    result["finitely_cogenerated"]              = c.finitely_cogenerated;
    result["finitely_cogenerated_trivial"]      = c.finitely_cogenerated_trivial;
    result["finitely_rees_cogenerated"]         = c.finitely_rees_cogenerated;
    result["finitely_rees_cogenerated_trivial"] = c.finitely_rees_cogenerated_trivial;
    return result;
  }

  json to_json(Universe const& U) {
    json result;
    result["max_monoid"] = U.monoid_bound;
    result["max_act"]    = U.act_bound;
    std::size_t total    = 0;
    json        monoids  = json::array();
    for (std::size_t i = 0; i < U.monoids.size(); ++i) {
      json entry;
      entry["table"] = table_json(U.monoids[i].table());
      entry["acts"]  = U.acts[i].size();
      total += U.acts[i].size();
      monoids.push_back(entry);
    }
    result["monoid_count"] = U.monoids.size();
    result["act_count"]    = total;
    result["monoids"]      = monoids;
    return result;
  }

  json to_json(ClaimResult const& r) {
    json result;
    result["claim"]     = r.claim;
    result["mode"]      = to_string(r.mode);
    result["checked"]   = r.checked;
    result["confirmed"] = r.confirmed;
    result["skipped"]   = r.skipped;
    json violations     = json::array();
    for (auto const& v : r.violations) {
      json entry;
      entry["monoid"]  = table_json(v.monoid);
      entry["act"]     = table_json(v.act);
      entry["details"] = v.details;
      violations.push_back(entry);
    }
    result["violations"] = violations;
    return result;
  }

  json report_json(Universe const& U, std::vector<ClaimResult> const& results) {
    json result;
    result["universe"] = to_json(U);
    json claims        = json::array();
    for (auto const& r : results) {
      claims.push_back(to_json(r));
    }
    result["claims"] = claims;
    return result;
  }

  ClaimResult claim_result_from_json(json const& j) {
    ClaimResult r;
    auto const& claim = field(j, "claim");
    auto const& mode  = field(j, "mode");
    if (!claim.is_string() || !mode.is_string()) {
      parse_error("\"claim\" and \"mode\" must be strings");
    }
    r.claim = claim.get<std::string>();
    if (mode == "hard") {
      r.mode = ClaimMode::hard;
    } else if (mode == "report") {
      r.mode = ClaimMode::report;
    } else {
      parse_error("unknown claim mode " + mode.get<std::string>());
    }
    r.checked     = size_field(j, "checked");
    r.confirmed   = size_field(j, "confirmed");
    r.skipped     = size_field(j, "skipped");
    auto const& v = field(j, "violations");
    if (!v.is_array()) {
      parse_error("\"violations\" must be an array");
    }
    for (auto const& entry : v) {
      Violation out;
      auto const& M = field(entry, "monoid");
      auto const& A = field(entry, "act");
      auto const& d = field(entry, "details");
      if (!d.is_string()) {
        parse_error("\"details\" must be a string");
      }
      out.monoid  = table_field(entry, "monoid", M.size(), M.empty() ? 0 : M[0].size());
      out.act     = table_field(entry, "act", A.size(), A.empty() ? 0 : A[0].size());
      out.details = d.get<std::string>();
      r.violations.push_back(std::move(out));
    }
    if (r.checked != r.confirmed + r.skipped + r.violations.size()) {
      parse_error("claim tallies do not add up for " + r.claim);
    }
    return r;
  }

  json to_json(Counterexample const& c) {
    json result;
    result["monoid"]  = to_json(c.monoid);
    result["act"]     = to_json(c.act);
    result["details"] = c.details;
    return result;
  }

}  // namespace acta::io
