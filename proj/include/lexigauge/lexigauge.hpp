#ifndef LEXIGAUGE_LEXIGAUGE_HPP
#define LEXIGAUGE_LEXIGAUGE_HPP

#include "lexigauge/csv.hpp"
#include "lexigauge/error.hpp"
#include "lexigauge/ingest.hpp"
#include "lexigauge/metrics.hpp"
#include "lexigauge/pipeline.hpp"
#include "lexigauge/semnet.hpp"
#include "lexigauge/stats.hpp"
#include "lexigauge/svg.hpp"
#include "lexigauge/textproc.hpp"
#include "lexigauge/unicode.hpp"
#include "lexigauge/xml.hpp"

#endif  // LEXIGAUGE_LEXIGAUGE_HPP
