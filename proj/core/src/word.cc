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

#include "bargmann/word.h"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "bargmann/error.h"

namespace bargmann {

Word::Word(std::vector<size_t> letters) : letters_(std::move(letters)) {
    if (letters_.empty()) {
        throw ArgumentError("word must contain at least one letter");
    }
    if (std::find(letters_.begin(), letters_.end(), size_t{0}) != letters_.end()) {
        throw ArgumentError("word letters are 1-based; got 0");
    }
}

Word::Word(std::initializer_list<size_t> letters) : Word(std::vector<size_t>(letters)) {
}

size_t Word::max_letter() const {
    return *std::max_element(letters_.begin(), letters_.end());
}

Word Word::rotated(size_t shift) const {
    std::vector<size_t> out = letters_;
    std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(shift % out.size()), out.end());
    return Word(std::move(out));
}

Word Word::reversed() const {
    return Word(std::vector<size_t>(letters_.rbegin(), letters_.rend()));
}

std::string Word::str() const {
    std::string out;
    for (size_t k = 0; k < letters_.size(); k++) {
        if (k > 0) {
            out += ',';
        }
        out += std::to_string(letters_[k]);
    }
    return out;
}

Word parse_word(std::string_view text) {
    std::vector<size_t> letters;
    size_t pos = 0;
    while (true) {
        size_t end = text.find(',', pos);
        std::string_view token = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
        while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front()))) {
            token.remove_prefix(1);
        }
        while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back()))) {
            token.remove_suffix(1);
        }
        size_t letter = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), letter);
        if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
            throw ParseError("invalid word '" + std::string(text) + "': expected comma-separated positive integers");
        }
        if (letter == 0) {
            throw ParseError("invalid word '" + std::string(text) + "': letters are 1-based");
        }
        letters.push_back(letter);
        if (end == std::string_view::npos) {
            break;
        }
        pos = end + 1;
    }
    return Word(std::move(letters));
}

}  // namespace bargmann
