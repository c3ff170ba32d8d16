// Copyright 2026 The Bargmann Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BARGMANN_WORD_H
#define BARGMANN_WORD_H

#include <compare>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace bargmann {

/// A nonempty sequence of 1-based state labels. The word (l1, ..., lm) indexes
/// the invariant tr(rho_l1 ... rho_lm).
class Word {
   public:
    /// Throws ArgumentError if empty or if any letter is 0.
    explicit Word(std::vector<size_t> letters);
    Word(std::initializer_list<size_t> letters);

    const std::vector<size_t> &letters() const {
        return letters_;
    }
    size_t size() const {
        return letters_.size();
    }
    size_t max_letter() const;

    /// Word rotated left by `shift` positions.
    Word rotated(size_t shift) const;
    Word reversed() const;

    /// Comma-separated form, e.g. "1,2,1,2".
    std::string str() const;

    /// Lexicographic on the letter sequence.
    auto operator<=>(const Word &other) const = default;

   private:
    std::vector<size_t> letters_;
};

/// Parses "1,2,3" (whitespace around letters tolerated). Throws ParseError.
Word parse_word(std::string_view text);

}  // namespace bargmann

#endif
