/*
   Copyright 2026 The etale-forge Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef ETALE_ERRORS_HPP
#define ETALE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace etale {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define ETALE_DEFINE_ERROR(Name)          \
    class Name : public Error {           \
    public:                               \
        using Error::Error;               \
    }

ETALE_DEFINE_ERROR(DivisionByZero);
ETALE_DEFINE_ERROR(FieldMismatch);
ETALE_DEFINE_ERROR(ReducibleMinpoly);
ETALE_DEFINE_ERROR(ArityError);
ETALE_DEFINE_ERROR(SourceTargetMismatch);
ETALE_DEFINE_ERROR(DegreeUndetermined);
ETALE_DEFINE_ERROR(CertificateRequired);
ETALE_DEFINE_ERROR(ChartDegenerate);
ETALE_DEFINE_ERROR(InfeasibleDegree);
ETALE_DEFINE_ERROR(BadEpsilon);
ETALE_DEFINE_ERROR(PreconditionViolated);
ETALE_DEFINE_ERROR(BadB);
ETALE_DEFINE_ERROR(UnsupportedN);
ETALE_DEFINE_ERROR(FormatError);

#undef ETALE_DEFINE_ERROR

}  // namespace etale

#endif  // ETALE_ERRORS_HPP
