// JSON reading and writing of monoids, acts, witnesses and reports.

#ifndef ACTA_IO_HPP_
#define ACTA_IO_HPP_

#include <filesystem>  // for path
#include <string>      // for string
#include <vector>      // for vector

#include <json.hpp>

#include "act.hpp"
#include "classify.hpp"
#include "cogeneration.hpp"
#include "congruence.hpp"
#include "monoid.hpp"
#include "structure.hpp"
#include "universe.hpp"

namespace acta::io {

  using json = nlohmann::ordered_json;

  //! {"n": int, "table": [[int]], "names": [string]?}.
  //!
  //! Malformed documents (missing fields, wrong types, n disagreeing with
  //! the table) throw Parse; an invalid table throws the validation error.
  Monoid monoid_from_json(json const& j);
  json   to_json(Monoid const& M);

  //! {"monoid": <inline monoid or path>, "m": int, "action": [[int]],
  //! "names": [string]?}.
  //!
  //! A string monoid is a path relative to ``base``. Rows whose length
  //! differs from the monoid order, or a row count differing from m,
  //! throw Parse.
  Act  act_from_json(json const& j, std::filesystem::path const& base = {});
  json to_json(Act const& A);

  //! Reads a file as JSON. Throws Io when it cannot be read and Parse when
  //! it is not JSON.
  json read_json(std::filesystem::path const& path);

  //! Writes j with two-space indentation and a final newline. Throws Io.
  void write_json(std::filesystem::path const& path, json const& j);

  Monoid load_monoid(std::filesystem::path const& path);
  Act    load_act(std::filesystem::path const& path);

  //! True when the document looks like an act (has an "action" field).
  bool is_act_document(json const& j);

  //! {"labels": [int]}, checked against A.
  Congruence congruence_from_json(Act const& A, json const& j);
  json       to_json(Congruence const& theta);

  json to_json(Subact const& B, Act const& A);
  json to_json(Hom const& h);
  json to_json(CogenerationWitness const& w);

  //! Subacts as {"elements": [int], "names": [string]}.
  json to_json(StructureReport const& r, Act const& A);

  //! A flat record; the cofaithful subset and subgenerator carry names.
  json to_json(Classification const& c, Act const& A);

  json to_json(Universe const& U);
  json to_json(ClaimResult const& r);

  //! {"universe": {...}, "claims": [...]}.
  json report_json(Universe const& U, std::vector<ClaimResult> const& results);

  ClaimResult claim_result_from_json(json const& j);

  json to_json(Counterexample const& c);

}  // namespace acta::io

#endif  // ACTA_IO_HPP_
