#pragma once

#include <stdexcept>
#include <string>

namespace artifact {

/** Violated precondition: bad parameters, shapes, ranges, input files. */
class ParamError : public std::invalid_argument {
public:
    explicit ParamError(const std::string& what) : std::invalid_argument(what) {}
};

/** Two independent computations of the same quantity disagree. */
class CrossCheckError : public std::logic_error {
public:
    explicit CrossCheckError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace artifact
