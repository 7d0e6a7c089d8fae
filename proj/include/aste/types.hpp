#ifndef ASTE_TYPES_HPP_
#define ASTE_TYPES_HPP_

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace aste {

enum class Polarity : std::uint8_t { POS = 0, NEU = 1, NEG = 2 };

const char* to_string(Polarity p);

// Inclusive token span [start, end], 0-based.
struct Span {
  int start = 0;
  int end = 0;

  auto operator<=>(const Span&) const = default;

  int length() const { return end - start + 1; }
  bool contains(int t) const { return start <= t && t <= end; }
  bool overlaps(const Span& o) const { return start <= o.end && o.start <= end; }
};

struct Triplet {
  Span aspect;
  Span opinion;
  Polarity polarity = Polarity::POS;

  auto operator<=>(const Triplet&) const = default;
};

struct Sentence {
  std::string id;
  std::string text;                 // raw sentence part, pre-tokenization
  std::vector<std::string> tokens;  // whitespace tokens of text
  std::set<Triplet> gold;
};

enum class Split : std::uint8_t { TRAIN, DEV, TEST };

struct Dataset {
  std::string name;
  Split split = Split::TRAIN;
  std::vector<Sentence> sentences;
};

struct DatasetStats {
  long num_sentences = 0;
  long num_aspects = 0;   // distinct aspect spans per sentence, summed
  long num_opinions = 0;  // distinct opinion spans per sentence, summed
  long num_pos = 0;
  long num_neu = 0;
  long num_neg = 0;
  long num_triplets = 0;

  bool operator==(const DatasetStats&) const = default;

  DatasetStats& operator+=(const DatasetStats& o) {
    num_sentences += o.num_sentences;
    num_aspects += o.num_aspects;
    num_opinions += o.num_opinions;
    num_pos += o.num_pos;
    num_neu += o.num_neu;
    num_neg += o.num_neg;
    num_triplets += o.num_triplets;
    return *this;
  }
  friend DatasetStats operator+(DatasetStats a, const DatasetStats& b) { return a += b; }
};

// Predicted triplets keyed by sentence id. Every sentence of the paired
// dataset has an entry; sentences without predictions map to an empty set.
using PredictionSet = std::map<std::string, std::set<Triplet>>;

// Execution policy for the numeric kernels. SERIAL is the reference path;
// PARALLEL runs the OpenMP kernels.
enum class Exec : std::uint8_t { SERIAL, PARALLEL };

}  // namespace aste

#endif  // ASTE_TYPES_HPP_
