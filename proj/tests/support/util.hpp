#pragma once

#include <functional>
#include <string>

#include <gtest/gtest.h>

#include "filiform/error.hpp"

// Code of the library error raised by f; a test failure if nothing is thrown.
inline filiform::ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const filiform::Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return filiform::ErrorCode::InvalidParameter;
}
