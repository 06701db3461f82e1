#pragma once

#include <stdexcept>
#include <string>

namespace repkit {

// Domain errors carry a stable name so front ends can report them verbatim.
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string name, const std::string& what)
      : std::runtime_error(what), name_(std::move(name)) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

#define REPKIT_DEFINE_ERROR(Name)                        \
  class Name : public DomainError {                      \
   public:                                               \
    explicit Name(const std::string& what)               \
        : DomainError(#Name, what) {}                    \
  }

REPKIT_DEFINE_ERROR(BadParameters);
REPKIT_DEFINE_ERROR(NotFreeQuotient);
REPKIT_DEFINE_ERROR(InconsistentDiagram);
REPKIT_DEFINE_ERROR(NotDivisible);
REPKIT_DEFINE_ERROR(NotASymPower);
REPKIT_DEFINE_ERROR(NotATensorPower);
REPKIT_DEFINE_ERROR(KTooLarge);
REPKIT_DEFINE_ERROR(RankMismatch);
REPKIT_DEFINE_ERROR(DimensionOverflow);
REPKIT_DEFINE_ERROR(GroupMismatch);
REPKIT_DEFINE_ERROR(DimMismatch);
REPKIT_DEFINE_ERROR(NotNormal);
REPKIT_DEFINE_ERROR(NotAutomorphism);
REPKIT_DEFINE_ERROR(NotEqualOnSubgroup);
REPKIT_DEFINE_ERROR(NonRationalResult);

#undef REPKIT_DEFINE_ERROR

}  // namespace repkit
