//
// sgtop - structural invariants and topologies of semigroups
//
// Cayley table files and corpus entries.
//
// File format, one record per file:
//
//   n
//   label_0 label_1 ... label_{n-1}
//   row 0: n whitespace-separated 0-based indices (row = left factor)
//   ...
//   row n-1
//
// '#' starts a comment that runs to the end of the line; blank lines are
// skipped.

#ifndef SGTOP_CORPUS_HPP_
#define SGTOP_CORPUS_HPP_

#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "finite_semigroup.hpp"  // for FiniteSemigroup
#include "semigroup.hpp"         // for Semigroup
#include "stream_semigroup.hpp"  // for DeclaredFacts

namespace sgtop {

  //! Throws ParseError (1-based line and column of the offending token),
  //! MalformedTable or NonAssociative.
  FiniteSemigroup parse_cayley(std::string_view text);

  //! parse_cayley on the contents of `path`; throws IoError.
  FiniteSemigroup read_cayley(std::string const& path);

  //! The canonical text of `s`; parse_cayley(format_cayley(s)) == s.
  std::string format_cayley(FiniteSemigroup const& s);

  enum class EntrySource { file, builder, enumerator };

  std::string_view to_string(EntrySource s);
  EntrySource      entry_source_from_string(std::string_view s);

  struct CorpusEntry {
    std::string              id;
    EntrySource              source = EntrySource::builder;
    Semigroup                semigroup;
    std::vector<std::string> tags;

    DeclaredFacts const& facts() const noexcept {
      return semigroup.facts();
    }
  };

  //! The id is the path as given.
  CorpusEntry entry_from_file(std::string const& path);
  //! The id is the spec; throws BadParameter for unknown builders.
  CorpusEntry entry_from_builder(std::string const& spec);
  //! The id is "enum:<n>:<index>".
  CorpusEntry entry_from_enumeration(FiniteSemigroup s, std::size_t index);

  //! Throws BadParameter on a repeated id or a declared fact that names no
  //! predicate.
  void validate_corpus(std::vector<CorpusEntry> const& entries);

}  // namespace sgtop

#endif  // SGTOP_CORPUS_HPP_
