#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "appendlab/core/bytes.hpp"

namespace appendlab::corpus {

// Sample taxonomy: one benign class plus eight malware families.
enum class Category : std::uint8_t {
  kBenign = 0,
  kAdware,
  kBackdoor,
  kBotnet,
  kDropper,
  kRansomware,
  kRootkit,
  kSpyware,
  kVirus,
};

inline constexpr int kCategoryCount = 9;
inline constexpr int kMaliciousCategoryCount = 8;

const std::string& category_name(Category c);
Category category_from_name(const std::string& name);  // throws SpecError

// Default malicious corpus mix. Proportions follow the reference testbed
// breakdown (adware 1947, backdoor 678, botnet 526, dropper 904,
// ransomware 900, rootkit 53, spyware 640, virus 659; total 6307).
const std::array<int, kMaliciousCategoryCount>& default_category_weights();

// A synthetic "executable": an immutable body holding all semantic content
// and an overlay that trailing bytes may be appended to. The overlay is never
// interpreted, so appends cannot change behaviour.
struct BinarySample {
  std::string id;
  Category category = Category::kBenign;
  Bytes body;
  Bytes overlay;

  bool operator==(const BinarySample& other) const = default;
};

}  // namespace appendlab::corpus
