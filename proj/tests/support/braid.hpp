#pragma once

#include <string>
#include <vector>

namespace linkcolor::testsupport {

// PD text of the closure of a braid word on `strands` strands. Letter +i
// crosses the strand at position i over the strand at i+1, letter -i under.
// Fixture plumbing: every component of the closure must pass under somewhere
// (true for all words used in tests), otherwise this throws.
std::string closed_braid_pd(int strands, const std::vector<int>& word);

// The bundled corpus shipped in data/corpus.tsv, regenerated for tests so the
// file cannot drift from the generators.
std::string bundled_corpus_text();

}  // namespace linkcolor::testsupport
