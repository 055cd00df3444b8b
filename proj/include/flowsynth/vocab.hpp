#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace flowsynth {

// Character set shared by the chart renderer, the text recognizer and the
// code emitter. 50 symbols plus a reserved blank index for CTC alignment.
class Vocabulary {
 public:
  static constexpr int kSize = 50;

  static const Vocabulary& canonical() {
    static const Vocabulary v(
        "abcdefghijklmnopqrstuvwxyz0123456789+-*/=<>()%,. :");
    return v;
  }

  int size() const { return kSize; }
  int blank_index() const { return kSize; }
  // Class count of the recognizer output: symbols plus blank.
  int num_classes() const { return kSize + 1; }

  char at(int index) const {
    if (index < 0 || index >= kSize)
      throw std::out_of_range("Vocabulary::at: index " +
                              std::to_string(index));
    return symbols_[index];
  }

  int index_of(char c) const {
    unsigned char u = static_cast<unsigned char>(c);
    return lookup_[u];
  }

  bool contains(char c) const { return index_of(c) >= 0; }

  bool contains_all(const std::string& s) const {
    for (char c : s)
      if (!contains(c)) return false;
    return true;
  }

  const std::string& symbols() const { return symbols_; }

 private:
  explicit Vocabulary(const char* symbols) : symbols_(symbols) {
    if (symbols_.size() != kSize)
      throw std::logic_error("Vocabulary: expected exactly 50 symbols");
    lookup_.fill(-1);
    for (int i = 0; i < kSize; ++i) {
      unsigned char u = static_cast<unsigned char>(symbols_[i]);
      if (lookup_[u] != -1)
        throw std::logic_error("Vocabulary: duplicate symbol");
      lookup_[u] = i;
    }
  }

  std::string symbols_;
  std::array<int, 256> lookup_{};
};

}  // namespace flowsynth
