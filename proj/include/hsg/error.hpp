/*
 *   Copyright 2026 The hsg Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef HSG_ERROR_HPP_
#define HSG_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace hsg {

  // Malformed input or a violated precondition.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // A configured size or degree limit would be exceeded.  Never silently
  // truncated.
  class CapExceeded : public Error {
   public:
    using Error::Error;
  };

  // A constructed object failed its own post-hoc verification.
  class VerificationFailure : public Error {
   public:
    using Error::Error;
  };

  namespace detail {
    [[noreturn]] inline void fail(std::string const& msg) {
      throw Error(msg);
    }
    inline void require(bool cond, std::string const& msg) {
      if (!cond) {
        throw Error(msg);
      }
    }
    inline void require_cap(bool cond, std::string const& msg) {
      if (!cond) {
        throw CapExceeded(msg);
      }
    }
  }  // namespace detail

}  // namespace hsg

#endif  // HSG_ERROR_HPP_
