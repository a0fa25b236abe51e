/*
 * SPDX-License-Identifier: Apache-2.0
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
 *
 * This file is part of scatk, a side-channel analysis toolkit for
 * dataflow accelerator parameter recovery.
 */

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace scatk {

/// A trace is shorter than the window/loading configuration requires.
class TraceTooShortError : public std::runtime_error {
  public:
    TraceTooShortError(std::int64_t required, std::int64_t actual,
                       const std::string &context = {})
        : std::runtime_error("trace too short: need " +
                             std::to_string(required) + " samples, have " +
                             std::to_string(actual) +
                             (context.empty() ? "" : " (" + context + ")")),
          required(required), actual(actual) {}

    std::int64_t required;
    std::int64_t actual;
};

/// Requested more principal components than the data rank supports.
class RankDeficientError : public std::runtime_error {
  public:
    RankDeficientError(std::int64_t requested, std::int64_t achievable)
        : std::runtime_error("rank-deficient input: requested " +
                             std::to_string(requested) +
                             " components, achievable rank is " +
                             std::to_string(achievable)),
          requested(requested), achievable(achievable) {}

    std::int64_t requested;
    std::int64_t achievable;
};

/// Cross-validation folds cannot be built (e.g. a class has fewer traces
/// than folds).
class FoldConstructionError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A persisted file is malformed: bad magic, bad version, truncated payload
/// or inconsistent manifest.
class DataFormatError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class UnsupportedVersionError : public DataFormatError {
  public:
    explicit UnsupportedVersionError(std::uint32_t version)
        : DataFormatError("unsupported file version " +
                          std::to_string(version)),
          version(version) {}

    std::uint32_t version;
};

/// Manifest and record section disagree about the trace count.
class CorruptDatasetError : public DataFormatError {
  public:
    CorruptDatasetError(std::uint64_t manifest_count,
                        std::uint64_t record_count)
        : DataFormatError("corrupt dataset: manifest declares " +
                          std::to_string(manifest_count) +
                          " traces but file holds " +
                          std::to_string(record_count)),
          manifest_count(manifest_count), record_count(record_count) {}

    std::uint64_t manifest_count;
    std::uint64_t record_count;
};

/// An internal contract was broken (e.g. test data touched during tuning).
class ContractViolationError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/// Operation not available for the trained model's feature path.
class UnsupportedOperationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace scatk
