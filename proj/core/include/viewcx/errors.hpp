#pragma once

#include <stdexcept>
#include <string>

namespace viewcx {

/// Why a raw 2xt matrix fails to be a valid view.
enum class ViewErrorCode {
  chain_violation,        // snap sets not a strict chain, or snap_1 empty
  disjointness_violation, // two group columns share a pid
  empty_group,            // group_k empty for k < t
  containment_violation,  // group_k not a subset of snap_k
  last_column_not_full,   // snap_t != [n]
};

const char* to_string(ViewErrorCode code);

class ViewError : public std::runtime_error {
public:
  ViewError(ViewErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ViewErrorCode code() const { return code_; }

private:
  ViewErrorCode code_;
};

/// Build exceeded its configured simplex budget.
class ResourceLimitError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Operation requires a non-void complex.
class VoidComplexError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// The queried simplex is not a member of the complex.
class SimplexAbsentError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// collapse_at called on a simplex that is not free.
class NotFreeError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Interval machinery applied to a complex that is not a freshly built
/// view or chromatic complex.
class NotAViewComplexError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

}  // namespace viewcx
