#include "bfl/price_series.hpp"

#include <cmath>

#include "bfl/errors.hpp"

namespace bfl {

void PriceSeries::validate() const {
    if (dates.size() != closes.size())
        throw ValidationError(ErrorCode::unparsable_row,
                              "price series: dates and closes differ in length");
    if (closes.size() < 2)
        throw ValidationError(ErrorCode::empty_series,
                              "price series: need at least 2 rows");
    for (std::size_t i = 0; i < closes.size(); ++i) {
        if (!std::isfinite(closes[i]) || closes[i] <= 0.0)
            throw ValidationError(ErrorCode::non_positive_price,
                                  "price series: close at row " + std::to_string(i) +
                                      " is not a positive finite number");
        if (!dates[i].ok())
            throw ValidationError(ErrorCode::unparsable_row,
                                  "price series: invalid date at row " + std::to_string(i));
        if (i > 0 && !(dates[i - 1] < dates[i])) {
            ErrorCode code = dates[i - 1] == dates[i] ? ErrorCode::duplicate_date
                                                      : ErrorCode::unparsable_row;
            throw ValidationError(code, "price series: dates not strictly ascending at row " +
                                            std::to_string(i));
        }
    }
}

}  // namespace bfl
