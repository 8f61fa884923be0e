/*
   Copyright 2026 The ztilde authors

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
#ifndef ZTILDE_ERRORS_HPP
#define ZTILDE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace zt {

/* Base class for everything this library throws on purpose. */
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/* Malformed textual input.  line/col are 1-based; 0 means "unknown". */
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line = 0, int col = 0)
        : Error(format(what, line, col)), line_(line), col_(col) {}
    int line() const { return line_; }
    int col() const { return col_; }

private:
    static std::string format(const std::string& what, int line, int col) {
        if (line <= 0) return what;
        std::string s = "line " + std::to_string(line);
        if (col > 0) s += ", col " + std::to_string(col);
        return s + ": " + what;
    }
    int line_, col_;
};

/* Structurally invalid object (bad shapes, unresolved names, ...). */
class ValidationError : public Error {
public:
    using Error::Error;
};

/* A linear system with no exact solution. */
class NoSolutionError : public Error {
public:
    using Error::Error;
};

/* Operation requires an acyclic complex and the input is not one. */
class NotAcyclicError : public Error {
public:
    using Error::Error;
};

/* File could not be read or written. */
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace zt

#endif
