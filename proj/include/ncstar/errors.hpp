/*
 * Copyright 2026 The ncstar Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace ncstar {

/// Malformed or inconsistent input (bad ids, bad parameters, violated preconditions).
class input_error : public std::runtime_error {
public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// Operation applied outside its mathematical domain (e.g. a tree-only
/// operation on a graph with cycles).
class domain_error : public std::runtime_error {
public:
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

/// A configured budget (element count, depth) would be exceeded.
class resource_error : public std::runtime_error {
public:
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

/// The requested resolution or depth is insufficient for a definite verdict.
class resolution_error : public std::runtime_error {
public:
  explicit resolution_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ncstar
