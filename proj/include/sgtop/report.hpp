//
// sgtop - structural invariants and topologies of semigroups
//
// Report documents: canonical JSON with sorted keys, two-space indentation,
// an explicit schema name and version, and a digest of the document body.
// Any edit that does not recompute the digest is rejected on reading.

#ifndef SGTOP_REPORT_HPP_
#define SGTOP_REPORT_HPP_

#include <cstddef>      // for size_t
#include <cstdint>      // for uint64_t
#include <optional>     // for optional
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "classifier.hpp"   // for ClassificationReport
#include "corpus.hpp"       // for EntrySource
#include "topologizer.hpp"  // for TopologyCertificate, EBaseKind
#include "types.hpp"        // for Budget

namespace sgtop {

  inline constexpr std::string_view report_schema  = "sgtop-report";
  inline constexpr int              report_version = 1;
  inline constexpr std::string_view tool_version   = "0.1.0";

  //! Counts of a TopologyCertificate.
  struct TopologySummary {
    Element     e    = 0;
    EBaseKind   kind = EBaseKind::E;
    std::size_t ground = 0;
    std::size_t separations = 0, exact_separations = 0;
    std::size_t continuity = 0;
    std::size_t regular = 0, regularity_checked = 0;
    std::size_t clopen = 0;
    std::size_t isolated = 0;
    ElementList nonisolated;
    //! Fewest neighbours found around a non-isolated point.
    std::size_t min_neighbours = 0;
    std::size_t discreteness = 0;
    //! Topologizability verdict with its note.
    Verdict     topologizable;
    std::string note;

    bool operator==(TopologySummary const&) const = default;
  };

  TopologySummary summarize(TopologyCertificate const& c);

  struct ReportEntry {
    std::string                    id;
    EntrySource                    source = EntrySource::builder;
    std::size_t                    order  = 0;  // 0 for streams
    ClassificationReport           classification;
    std::optional<TopologySummary> topology;

    bool operator==(ReportEntry const&) const = default;
  };

  struct ReportDocument {
    std::string              tool = std::string(tool_version);
    Budget                   budget;
    std::uint64_t            seed = 0;
    std::vector<ReportEntry> entries;

    bool operator==(ReportDocument const&) const = default;
  };

  //! The canonical text, ending in a newline.
  std::string serialize_report(ReportDocument const& doc);
  //! Throws SchemaMismatch for a wrong schema, version or digest, or a
  //! malformed body.
  ReportDocument parse_report(std::string_view text);

  //! Throws IoError.
  void           write_report(ReportDocument const& doc, std::string const& path);
  ReportDocument read_report(std::string const& path);

  //! 64-bit FNV-1a, as 16 lowercase hex digits.
  std::string fnv1a_hex(std::string_view bytes);

}  // namespace sgtop

#endif  // SGTOP_REPORT_HPP_
