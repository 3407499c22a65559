#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "coinweigh/oeis.hpp"

namespace coinweigh {

enum class SequenceSource { Formula, ExceptionTable };

struct SequenceRecord {
  Int n = 0;
  Int w_bounding = 0;
  Int w_min = 0;
  Int coin_floor = 0;
  std::optional<Int> coin_ceiling;
  SequenceSource source = SequenceSource::Formula;
};

// Rows computed from the bounds module.
std::vector<SequenceRecord> sequence_table(Int n_from, Int n_to);

// Published minimal bounding weights / minimal weights for n = 3..100.
const std::array<Int, 98>& embedded_wb_list();
const std::array<Int, 98>& embedded_wm_list();

// n values where the computed table disagrees with the embedded lists;
// empty when everything reproduces.
std::vector<Int> golden_diff_mismatches();

enum class OeisStatus { Match, Mismatch, Unavailable };

struct OeisCheck {
  std::string sequence_id;
  std::string offset_map;  // which local index lines up with which b-file index
  Int matched_terms = 0;
  OeisStatus status = OeisStatus::Unavailable;
  std::optional<Int> first_bad_index;  // local index of the first disagreement
  std::string detail;
};

// Match requires at least five aligned terms, all agreeing. alignment maps
// local index 0 to that b-file index.
OeisCheck oeis_compare(const std::string& id, const std::vector<Int>& local_terms,
                       Int alignment, const OeisOptions& options = {});

// The nine cross-checks of this library's formulas against their OEIS
// entries, each with its explicit alignment.
std::vector<OeisCheck> run_named_oeis_checks(const OeisOptions& options = {});

}  // namespace coinweigh
