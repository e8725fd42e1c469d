#pragma once

#include <stdexcept>

namespace logrca {

// Input stream cannot be interpreted at all (bad header, missing column).
struct CsvFormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Fewer days (or series points) than a protocol requires.
struct InsufficientDataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Model snapshot unreadable or written by an incompatible version.
struct SnapshotError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace logrca
