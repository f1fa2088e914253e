// Copyright 2026 The latticefilter Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LATTICEFILTER_ERRORS_HPP
#define LATTICEFILTER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace latticefilter {

/// Base class for every error raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BadParameter : Error {
    using Error::Error;
};
struct CompositeModulus : Error {
    using Error::Error;
};
struct RankDeficient : Error {
    using Error::Error;
};
struct SingularGram : Error {
    using Error::Error;
};
struct DuplicateNodes : Error {
    using Error::Error;
};
struct ScaleExceeded : Error {
    using Error::Error;
};
struct BadShape : Error {
    using Error::Error;
};
struct InsufficientSamples : Error {
    using Error::Error;
};
struct EmptySolutionSet : Error {
    using Error::Error;
};
struct Timeout : Error {
    using Error::Error;
};

}  // namespace latticefilter

#endif
