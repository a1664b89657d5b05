#include <math.h>
#include <stdio.h>
#include "zx.h"

#define CHECK(cond)                                              \
    do {                                                         \
        if (!(cond)) {                                           \
            fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
            return 1;                                            \
        }                                                        \
    } while (0)

int main(void) {
    ZxMangoldtTable *primes = NULL;
    CHECK(zx_mangoldt_sieve(400, &primes) == ZX_STATUS_OK);
    double lam = 0.0;
    CHECK(zx_mangoldt_table_get(primes, 8, &lam) == ZX_STATUS_OK);
    CHECK(fabs(lam - log(2.0)) < 1e-15);
    CHECK(zx_mangoldt_table_get(primes, 401, &lam) == ZX_STATUS_OUT_OF_RANGE);

    ZxZeroTable *zeros = NULL;
    CHECK(zx_zeros_compute(200.0, &zeros) == ZX_STATUS_OK);
    CHECK(zx_zeros_len(zeros) == 79);
    double gamma = 0.0, mu = 1.0;
    CHECK(zx_zeros_get(zeros, 0, &gamma, &mu) == ZX_STATUS_OK);
    CHECK(fabs(gamma - 14.134725141734693) < 1e-9 && mu == 0.0);

    ZxEstimate est;
    CHECK(zx_estimate(5.0, 200.0, zeros, &est) == ZX_STATUS_OK);
    CHECK(est.bound_satisfied == 1);
    CHECK(fabs(est.estimate - log(5.0)) <= est.total_bound);
    CHECK(zx_estimate(5.0, 500.0, zeros, &est) == ZX_STATUS_OUT_OF_RANGE);

    char msg[256];
    size_t need = zx_last_error_message(msg, sizeof msg);
    CHECK(need > 1 && need <= sizeof msg);

    double phi = 0.0;
    CHECK(zx_phi2(14.135, 300, 0.12, primes, &phi) == ZX_STATUS_OK);
    CHECK(isfinite(phi));

    ZxZeroTable *bad = NULL;
    CHECK(zx_zeros_parse("14.1\n12.0\n", &bad) == ZX_STATUS_PARSE);
    CHECK(bad == NULL);

    zx_zeros_free(zeros);
    zx_mangoldt_table_free(primes);
    printf("zx %s ok\n", zx_version());
    return 0;
}
