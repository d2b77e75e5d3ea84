#pragma once

#include <gtest/gtest.h>

#include "fcont/error.hpp"

/// The code of the fcont::Error thrown by f, failing the test if none is thrown.
template <class F>
fcont::ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const fcont::Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no fcont::Error thrown";
  return fcont::ErrorCode::io_error;
}
