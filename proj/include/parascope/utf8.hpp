// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace parascope::utf8 {

// Number of code points in a UTF-8 string. Invalid lead bytes count as one
// code point each so the mapping stays total.
std::size_t length(std::string_view text);

// Byte offset of the code point at index `cp`. Returns std::string::npos when
// `cp` is past the end (cp == length(text) maps to text.size()).
std::size_t byte_offset(std::string_view text, std::size_t cp);

// Code point index of the byte at `byte`; `byte` must sit on a boundary.
std::size_t codepoint_offset(std::string_view text, std::size_t byte);

bool is_continuation(unsigned char c);

}  // namespace parascope::utf8
