#pragma once

#include <stdexcept>
#include <string>

namespace indgrass {

/* Malformed input: unparseable serialization or violated precondition. */
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/* Breach of an internal mathematical invariant: negative cohomology count,
 * an interval that should collapse but does not, Chern bookkeeping mismatch.
 * These indicate a bug, never bad user input. */
class invariant_error : public std::logic_error {
public:
    explicit invariant_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace indgrass
