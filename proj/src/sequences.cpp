#include "coinweigh/sequences.hpp"

#include "coinweigh/bounds.hpp"

namespace coinweigh {

namespace {

// Minimal bounding weights W_B(n), n = 3..100.
constexpr std::array<Int, 98> kWb = {
    5,     8,     20,    33,    40,    70,    99,    112,   168,   219,   240,   330,
    409,   440,   572,   685,   728,   910,   1063,  1120,  1360,  1559,  1632,  1938,
    2189,  2280,  2660,  2969,  3080,  3542,  3915,  4048,  4600,  5043,  5200,  5850,
    6369,  6552,  7308,  7909,  8120,  8990,  9679,  9920,  10912, 11695, 11968, 13090,
    13973, 14280, 15540, 16529, 16872, 18278, 19379, 19760, 21320, 22539, 22960, 24682,
    26025, 26488, 28380, 29853, 30360, 32430, 34039, 34592, 36848, 38599, 39200, 41650,
    43549, 44200, 46852, 48905, 49608, 52470, 54683, 55440, 58520, 60899, 61712, 65018,
    67569, 68440, 71980, 74709, 75640, 79422, 82335, 83328, 87360, 90463, 91520, 95810,
    99109, 100232};

// Minimal weights W_M(n), n = 3..100; differs from kWb in exactly eight places.
constexpr std::array<Int, 98> kWm = {
    5,     8,     20,    33,    40,    75,    99,    112,   168,   219,   240,   337,
    409,   440,   572,   685,   728,   917,   1063,  1120,  1360,  1559,  1632,  1943,
    2189,  2280,  2660,  2969,  3080,  3543,  3915,  4048,  4600,  5043,  5200,  5857,
    6369,  6552,  7308,  7909,  8120,  8991,  9679,  9920,  10912, 11695, 11968, 13095,
    13973, 14280, 15540, 16529, 16872, 18278, 19379, 19760, 21320, 22539, 22960, 24682,
    26025, 26488, 28380, 29853, 30360, 32430, 34039, 34592, 36848, 38599, 39200, 41650,
    43549, 44200, 46852, 48905, 49608, 52470, 54683, 55440, 58520, 60899, 61712, 65018,
    67569, 68440, 71980, 74709, 75640, 79422, 82335, 83328, 87360, 90463, 91520, 95810,
    99109, 100232};

}  // namespace

const std::array<Int, 98>& embedded_wb_list() { return kWb; }
const std::array<Int, 98>& embedded_wm_list() { return kWm; }

std::vector<SequenceRecord> sequence_table(Int n_from, Int n_to) {
  if (n_from < 3 || n_from > n_to) throw OutOfRange("need 3 <= n_from <= n_to");
  std::vector<SequenceRecord> out;
  out.reserve(static_cast<size_t>(n_to - n_from + 1));
  for (Int n = n_from; n <= n_to; ++n) {
    SequenceRecord rec;
    rec.n = n;
    rec.w_bounding = min_bounding_weight(n).second;
    rec.w_min = closed_form_min_weight(n);
    const auto [floor, ceiling] = coin_bounds(n);
    rec.coin_floor = floor;
    rec.coin_ceiling = ceiling;
    rec.source = is_weight_exception(n) ? SequenceSource::ExceptionTable : SequenceSource::Formula;
    out.push_back(rec);
  }
  return out;
}

std::vector<Int> golden_diff_mismatches() {
  std::vector<Int> bad;
  for (Int n = 3; n <= 100; ++n) {
    if (min_bounding_weight(n).second != kWb[n - 3]) bad.push_back(n);
    if (closed_form_min_weight(n) != kWm[n - 3]) bad.push_back(n);
  }
  return bad;
}

OeisCheck oeis_compare(const std::string& id, const std::vector<Int>& local_terms,
                       Int alignment, const OeisOptions& options) {
  if (local_terms.size() < 5) throw OutOfRange("need at least five local terms");
  OeisCheck check;
  check.sequence_id = id;
  check.offset_map = "local[0] ~ b(" + std::to_string(alignment) + ")";
  BFileTerms terms;
  try {
    terms = oeis_fetch(id, options);
  } catch (const NetworkUnavailable& e) {
    check.status = OeisStatus::Unavailable;
    check.detail = e.what();
    return check;
  }
  std::map<Int, Int> by_index(terms.begin(), terms.end());
  Int matched = 0;
  for (size_t i = 0; i < local_terms.size(); ++i) {
    auto it = by_index.find(alignment + static_cast<Int>(i));
    if (it == by_index.end()) continue;
    if (it->second != local_terms[i]) {
      check.status = OeisStatus::Mismatch;
      check.first_bad_index = static_cast<Int>(i);
      check.detail = "local " + std::to_string(local_terms[i]) + " vs OEIS " +
                     std::to_string(it->second);
      return check;
    }
    ++matched;
  }
  check.matched_terms = matched;
  check.status = matched >= 5 ? OeisStatus::Match : OeisStatus::Mismatch;
  if (matched < 5) check.detail = "fewer than five aligned terms";
  return check;
}

std::vector<OeisCheck> run_named_oeis_checks(const OeisOptions& options) {
  constexpr Int kTerms = 24;
  std::vector<OeisCheck> out;

  // Tetrahedral numbers via the convolution 1*m + 2*(m-1) + ... + m*1.
  {
    std::vector<Int> local;
    for (Int m = 0; m < kTerms; ++m) {
      Int sum = 0;
      for (Int i = 1; i <= m; ++i) sum += i * (m - i + 1);
      local.push_back(sum);
    }
    out.push_back(oeis_compare("A000292", local, 0, options));
  }
  // W_L at the balanced separation point for n = 3k+1: sums of even squares.
  {
    std::vector<Int> local;
    for (Int k = 1; k <= kTerms; ++k) local.push_back(bounding_weights(2 * k + 2, 3 * k + 1).w_left);
    out.push_back(oeis_compare("A002492", local, 1, options));
  }
  // W_R at the minimal separation point for n = 3k.
  {
    std::vector<Int> local;
    for (Int k = 1; k <= kTerms; ++k) local.push_back(bounding_weights(2 * k + 1, 3 * k).w_right);
    out.push_back(oeis_compare("A132124", local, 1, options));
  }
  // Minimal bounding weights for n = 3k+2.
  {
    std::vector<Int> local;
    for (Int k = 1; k <= kTerms; ++k) local.push_back(min_bounding_weight(3 * k + 2).second);
    out.push_back(oeis_compare("A259110", local, 2, options));
  }
  // W_L for n = 3k+2: sums of odd squares.
  {
    std::vector<Int> local;
    for (Int k = 1; k <= kTerms; ++k) local.push_back(bounding_weights(2 * k + 3, 3 * k + 2).w_left);
    out.push_back(oeis_compare("A000447", local, 2, options));
  }
  // Same W_L restricted to odd k.
  {
    std::vector<Int> local;
    for (Int k = 1; k <= 2 * kTerms; k += 2) local.push_back(bounding_weights(2 * k + 3, 3 * k + 2).w_left);
    out.push_back(oeis_compare("A267031", local, 1, options));
  }
  // Same W_L restricted to even k: odd tetrahedral numbers.
  {
    std::vector<Int> local;
    for (Int k = 2; k <= 2 * kTerms; k += 2) local.push_back(bounding_weights(2 * k + 3, 3 * k + 2).w_left);
    out.push_back(oeis_compare("A015219", local, 1, options));
  }
  // Coin counts for n = 3k+1: second heptagonal numbers.
  {
    std::vector<Int> local;
    for (Int k = 1; k <= kTerms; ++k) {
      const Int n = 3 * k + 1;
      local.push_back(exact_div(5 * n * n - n - 4, 18));
    }
    out.push_back(oeis_compare("A147875", local, 1, options));
  }
  // Half the coin counts for n = 3k+2, k even.
  {
    std::vector<Int> local;
    for (Int k = 0; k <= 2 * kTerms; k += 2) {
      const Int n = 3 * k + 2;
      local.push_back(exact_div(exact_div(5 * n * n + 4 * n + 8, 18), 2));
    }
    out.push_back(oeis_compare("A079273", local, 0, options));
  }
  return out;
}

}  // namespace coinweigh
