#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gdc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class SizeLimitError : public Error {
 public:
  using Error::Error;
};

class NotColorProcessError : public Error {
 public:
  using Error::Error;
};

// Size caps can be raised with GDC_CAP_<NAME>, e.g. GDC_CAP_SET_PARTITION_N=14.
std::size_t size_cap(const std::string& name, std::size_t fallback);

// Throws SizeLimitError when value exceeds the (possibly overridden) cap.
void check_cap(const std::string& name, std::size_t fallback, std::size_t value);

}  // namespace gdc
