use num_bigint::BigInt;
use num_rational::BigRational;
use rug::{Complex, Float};
use zetainv_core::logderiv::{
    keiper_li, log_derivative_zeta, sneddon_bessel_z, z1_table, z1_voros, z_modsq_asymptotic, z_modsq_bologna,
    z_modsq_keiper_li, z_nt_closed_form, z_nt_table,
};
use zetainv_core::mp::{decimal_places, decimal_places_real, parse_decimal, pi, zeta_u, PrecisionContext};
use zetainv_core::specfun::FunctionSpec;

fn ctx(d: u32) -> PrecisionContext {
    PrecisionContext::new(d).unwrap()
}

fn lit(ctx: &PrecisionContext, s: &str) -> Float {
    parse_decimal(s, ctx).unwrap()
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

const BESSEL_TABLE: [[(i64, i64); 4]; 6] = [
    [(1, 4), (1, 8), (1, 12), (1, 16)],
    [(1, 32), (1, 192), (1, 576), (1, 1280)],
    [(1, 192), (1, 3072), (1, 17280), (1, 61440)],
    [(11, 12288), (1, 46080), (7, 3317760), (13, 34406400)],
    [(19, 122880), (13, 8847360), (11, 139345920), (1, 110100480)],
    [(473, 17694720), (11, 110100480), (797, 267544166400), (263, 1189085184000)],
];

#[test]
fn sneddon_reproduces_rational_table() {
    for nu in 0..4 {
        let z = sneddon_bessel_z(&q(nu, 1), 6);
        for (row, cells) in BESSEL_TABLE.iter().enumerate() {
            let (n, d) = cells[nu as usize];
            assert_eq!(z[row], q(n, d), "nu = {nu}, m = {}", 2 * row + 2);
        }
    }
}

#[test]
fn jet_route_matches_rational_table() {
    let ctx = ctx(100);
    for nu in 0..4u32 {
        let t = log_derivative_zeta(&FunctionSpec::bessel_j(ctx.real(nu)).unwrap(), 12, &ctx).unwrap();
        for (row, cells) in BESSEL_TABLE.iter().enumerate() {
            let (n, d) = cells[nu as usize];
            let want = Float::with_val(ctx.bits(), n) / Float::with_val(ctx.bits(), d);
            let got = t.value(2 * row + 2).unwrap();
            assert!(decimal_places(got, &Complex::with_val(ctx.bits(), want)) > 80.0);
        }
    }
}

#[test]
fn sinc_sums_are_even_zeta_values() {
    let ctx = ctx(60);
    let t = log_derivative_zeta(&FunctionSpec::sinc(), 6, &ctx).unwrap();
    let p = pi(ctx.bits());
    let want = Float::with_val(ctx.bits(), &p * &p) / 3u32;
    assert!(decimal_places(t.value(2).unwrap(), &Complex::with_val(ctx.bits(), want)) > 58.0);
    assert!(t.value(3).unwrap().clone().abs().real().to_f64() < 1e-55);
    let z6 = Float::with_val(ctx.bits(), zeta_u(6, ctx.bits()) * 2u32);
    assert!(decimal_places(t.value(6).unwrap(), &Complex::with_val(ctx.bits(), z6)) > 58.0);
}

#[test]
fn shifted_zeta_sums_over_all_zeros() {
    let ctx = ctx(60);
    let all = log_derivative_zeta(&FunctionSpec::riemann_zeta_shifted(), 2, &ctx).unwrap();
    let trivial = Float::with_val(ctx.bits(), zeta_u(2, ctx.bits()) / 4u32);
    let nt = z_nt_closed_form(2, &ctx).unwrap();
    let want = Complex::with_val(ctx.bits(), trivial + nt);
    assert!(decimal_places(all.value(2).unwrap(), &want) > 55.0);
}

#[test]
fn closed_form_values() {
    let ctx = ctx(60);
    for (m, v) in [(2, "-0.046154317295804602757"), (3, "-0.000111158231452105922"), (5, "0.000000715093355762607")] {
        let z = z_nt_closed_form(m, &ctx).unwrap();
        assert!(decimal_places_real(&z, &lit(&ctx, v)) > 21.0, "m = {m}");
    }
}

#[test]
fn modulus_squared_routes() {
    let ctx = ctx(60);
    let t = z_nt_table(10, &ctx).unwrap();
    let a = z_modsq_asymptotic(2, &t).unwrap();
    let z2 = t.value(2).unwrap();
    let direct = Complex::with_val(ctx.bits(), Complex::with_val(ctx.bits(), z2 * z2) - t.value(4).unwrap()) / 2u32;
    assert!(decimal_places(&a, &Complex::with_val(ctx.bits(), direct)) > 58.0);

    let l = keiper_li(5, &ctx).unwrap();
    assert!(decimal_places_real(&l[0], &lit(&ctx, "0.02309570896612103381")) > 19.0);
    assert!(decimal_places_real(&l[3], &lit(&ctx, "0.36879047949224163859")) > 19.0);
    let s1 = z_modsq_keiper_li(1, &l).unwrap();
    assert!(decimal_places_real(&s1, &lit(&ctx, "0.023095708966121033814310247906")) > 29.0);
    let s2 = z_modsq_keiper_li(2, &l).unwrap();
    assert!(decimal_places_real(&s2, &lit(&ctx, "0.000037100636437464871512505433")) > 29.0);
    let s5 = z_modsq_keiper_li(5, &l).unwrap();
    assert!(decimal_places_real(&s5, &lit(&ctx, "0.000000000003193891860867324232")) > 29.0);
    for m in 2..=5 {
        let b = z_modsq_bologna(m, &t).unwrap();
        let k = z_modsq_keiper_li(m, &l).unwrap();
        assert!(decimal_places(&b, &Complex::with_val(ctx.bits(), k)) > 55.0, "m = {m}");
    }
}

#[test]
fn voros_formula_agrees_with_critical_line_jet() {
    let ctx = ctx(60);
    let t = z1_table(8, &ctx).unwrap();
    for (m, v) in [(2, "0.0231049931154189707889"), (4, "0.0000371725992852696861")] {
        let z = z1_voros(m, &ctx).unwrap();
        assert!(decimal_places_real(&z, &lit(&ctx, v)) > 21.0);
        assert!(decimal_places(t.value(m).unwrap(), &Complex::with_val(ctx.bits(), z)) > 55.0);
    }
    assert!(z1_voros(3, &ctx).is_err());
}

#[test]
fn table_lookup_bounds() {
    let ctx = ctx(30);
    let t = z_nt_table(3, &ctx).unwrap();
    assert!(t.get(0).is_none());
    assert!(t.value(4).is_err());
    assert_eq!(t.m_max(), 3);
}
