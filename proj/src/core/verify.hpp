#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace syt {

// Parameters shared by the named identities; each identity reads the ones it
// needs and rejects a missing one with InvalidArgument.
struct VerifyArgs {
  std::optional<std::vector<int>> mu;  // parts as given, zeros allowed
  std::optional<int> m;
  std::optional<int> n;
  std::optional<int> k;
  std::optional<int> t;
  std::optional<int> t1;
  std::optional<int> t2;
  std::optional<int> big_n;
};

struct VerifyReport {
  std::string identity;
  std::string title;
  std::string lhs;
  std::string rhs;
  bool passed = false;
  bool conjecture = false;
  std::vector<std::string> details;
};

const std::vector<std::string>& identity_names();

// UnknownIdentity for names outside identity_names().
VerifyReport verify_identity(std::string_view name, const VerifyArgs& args);

}  // namespace syt
