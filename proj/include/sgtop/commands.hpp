//
// sgtop - structural invariants and topologies of semigroups
//
// The command-line surface. Every command writes its primary output to `out`
// and diagnostics to `err`, and returns an exit code:
//
//   0 ok, 1 usage, 2 certification or integrity failure, 3 witness not found,
//   4 size cap exceeded.

#ifndef SGTOP_COMMANDS_HPP_
#define SGTOP_COMMANDS_HPP_

#include <cstdint>   // for uint64_t
#include <iosfwd>    // for ostream
#include <optional>  // for optional
#include <string>    // for string
#include <vector>    // for vector

#include "corpus.hpp"       // for CorpusEntry
#include "report.hpp"       // for ReportDocument
#include "topologizer.hpp"  // for EBaseKind
#include "types.hpp"        // for Budget, Element

namespace sgtop {

  enum ExitCode : int {
    exit_ok         = 0,
    exit_usage      = 1,
    exit_integrity  = 2,
    exit_not_found  = 3,
    exit_size_cap   = 4
  };

  struct CliConfig {
    Budget                   budget;
    std::uint64_t            seed = 0;
    //! Report path; empty writes the report to `out`.
    std::string              out;
    EBaseKind                kind = EBaseKind::E;
    std::optional<Element>   e;
    bool                     commutative_only = false;
    bool                     dedupe_iso       = false;
    std::vector<std::string> files;
    std::vector<std::string> builders;
  };

  //! Files first, then builder specs, in the order given.
  std::vector<CorpusEntry> load_corpus(CliConfig const& config);

  //! Classifies every entry, in parallel, and orders the entries by id.
  ReportDocument classify_corpus(std::vector<CorpusEntry> const& entries,
                                 CliConfig const&                config);

  int cmd_classify(CliConfig const& config, std::ostream& out, std::ostream& err);
  //! The single builder in `config.builders`.
  int cmd_topology(CliConfig const& config, std::ostream& out, std::ostream& err);
  int cmd_enumerate(std::size_t n, CliConfig const& config, std::ostream& out,
                    std::ostream& err);
  //! The raw predicate suites as canonical JSON keyed by entry id.
  int cmd_predicates(CliConfig const& config, std::ostream& out, std::ostream& err);

  //! Parses the arguments and dispatches.
  int run_cli(int argc, char const* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sgtop

#endif  // SGTOP_COMMANDS_HPP_
