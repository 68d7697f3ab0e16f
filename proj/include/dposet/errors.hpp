#pragma once

#include <stdexcept>
#include <string>

namespace dposet {

// Domain errors carry a stable name used by the CLI for error mapping and by
// golden tests. Message is free-form context.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string name, const std::string& msg)
        : std::runtime_error(name + ": " + msg), name_(std::move(name)) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

#define DPOSET_DEFINE_ERROR(Name)                                        \
    class Name : public DomainError {                                    \
    public:                                                              \
        explicit Name(const std::string& msg) : DomainError(#Name, msg) {} \
    }

DPOSET_DEFINE_ERROR(CycleError);
DPOSET_DEFINE_ERROR(UnknownLabel);
DPOSET_DEFINE_ERROR(UnknownGenerator);
DPOSET_DEFINE_ERROR(TooLarge);
DPOSET_DEFINE_ERROR(NotCompatible);
DPOSET_DEFINE_ERROR(SingularMatrix);
DPOSET_DEFINE_ERROR(MissingRep);
DPOSET_DEFINE_ERROR(InconsistentVH);
DPOSET_DEFINE_ERROR(OriginNotInterior);
DPOSET_DEFINE_ERROR(NotLatticePolytope);
DPOSET_DEFINE_ERROR(Degenerate);
DPOSET_DEFINE_ERROR(NotFullDimensional);
DPOSET_DEFINE_ERROR(NegativeCoordinate);
DPOSET_DEFINE_ERROR(NotDualIntegral);
DPOSET_DEFINE_ERROR(NotAntiBlocking);
DPOSET_DEFINE_ERROR(UnknownFilterVariable);
DPOSET_DEFINE_ERROR(NonTerminating);

#undef DPOSET_DEFINE_ERROR

} // namespace dposet
