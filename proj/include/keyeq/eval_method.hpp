/*
 * Copyright 2026 The keyeq Authors
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

#pragma once

#include <optional>
#include <string_view>

namespace keyeq {

/// Error-value formula used after the error positions are known.
enum class EvalMethod { forney, horiguchi };

inline const char* to_string(EvalMethod m)
{
    return m == EvalMethod::forney ? "forney" : "horiguchi";
}

inline std::optional<EvalMethod> parse_eval_method(std::string_view s)
{
    if (s == "forney")
        return EvalMethod::forney;
    if (s == "horiguchi")
        return EvalMethod::horiguchi;
    return std::nullopt;
}

}  // namespace keyeq
