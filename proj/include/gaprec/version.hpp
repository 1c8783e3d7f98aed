#pragma once

#define GAPREC_VERSION "0.1.0"
