/* The public header must be consumable from plain C. */

#include <stdio.h>
#include <string.h>

#include "heightlab.h"

static int checks = 0;
static int bad = 0;

static void expect(int cond, const char* what) {
    ++checks;
    if (!cond) {
        ++bad;
        fprintf(stderr, "FAIL: %s\n", what);
    }
}

int main(void) {
    expect(strcmp(hl_version(), "0.1.0") == 0, "version");

    hl_lattice* lat = NULL;
    expect(hl_lattice_parse(
               "{\"schema\":1,\"rank\":2,\"gram\":[[\"4\",\"0\"],[\"0\",\"1\"]]}",
               &lat) == HL_OK,
           "lattice parse");
    char* deg = NULL;
    expect(hl_lattice_degree(lat, &deg) == HL_OK, "degree call");
    expect(deg != NULL && strcmp(deg, "logv:1/4") == 0, "degree value");
    hl_string_free(deg);

    char* dec = NULL;
    expect(hl_logv_to_decimal("logv:1/4", 6, &dec) == HL_OK, "decimal call");
    expect(dec != NULL && strncmp(dec, "-0.693147", 9) == 0, "decimal value");
    hl_string_free(dec);

    hl_lattice* none = NULL;
    expect(hl_lattice_parse("{\"schema\":2}", &none) == HL_ERR_PARSE,
           "schema rejection");
    expect(strlen(hl_last_error()) > 0, "error text");

    hl_lattice_free(lat);
    printf("%d checks, %d failures\n", checks, bad);
    return bad == 0 ? 0 : 1;
}
