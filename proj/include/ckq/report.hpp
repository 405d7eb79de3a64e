#pragma once

#include <string>

#include "ckq/classify.hpp"
#include "ckq/verify.hpp"

namespace ckq {

/// Catalog label of the class holding the spec, or "" when S is empty or N is unsupported.
std::string class_name(const GroupSpec& spec);

std::string describe_json(const GroupSpec& spec);
std::string describe_text(const GroupSpec& spec);

std::string verify_json(const GroupSpec& spec, const VerifyOptions& opt, const VerifyReport& rep);
std::string verify_text(const VerifyReport& rep);

struct ContractReport {
  ContractedGroup group;
  std::string name;
  std::vector<AxiomCheck> checks;  // Hopf checks on the contracted data
  bool ok = true;                  // checks pass, no ill-defined antipode, nothing unresolved
};

ContractReport contract_report(const GroupSpec& spec, const ContractOptions& opt = {});
std::string contract_json(const ContractReport& r);
std::string contract_text(const ContractReport& r);

}  // namespace ckq
