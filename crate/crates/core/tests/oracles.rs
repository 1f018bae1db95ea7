//! Values checked against mpmath at 60 digits (barnesg, loggamma, psi,
//! zeta with derivative, clsin, glaisher, catalan).

use barnes_core::barnes::log_barnes_g;
use barnes_core::glaisher::{log_glaisher, GlaisherMethod};
use barnes_core::precision::log10_abs_c;
use barnes_core::special::{
    catalan, clausen_cl2, digamma, hurwitz_zeta, hurwitz_zeta_prime_neg1, log_gamma, trigamma, zeta_prime_2,
    zeta_prime_neg,
};
use barnes_core::PrecisionContext;
use rug::{Complex, Float};

const DIGITS: u32 = 45;

fn ctx() -> PrecisionContext {
    PrecisionContext::new(DIGITS)
}

fn c(ctx: &PrecisionContext, re: &str, im: &str) -> Complex {
    let b = ctx.bits();
    Complex::with_val(
        b,
        (Float::with_val(b, Float::parse(re).unwrap()), Float::with_val(b, Float::parse(im).unwrap())),
    )
}

fn third(ctx: &PrecisionContext) -> Complex {
    Complex::with_val(ctx.bits(), Float::with_val(ctx.bits(), 1) / 3u32)
}

/// Relative agreement to DIGITS − 1 digits.
fn assert_close(got: &Complex, want: &Complex, what: &str) {
    let rel = log10_abs_c(&Complex::with_val(got.prec().0, got - want)) - log10_abs_c(want).max(0.0);
    assert!(rel < -(f64::from(DIGITS) - 1.0), "{what}: got {got}, want {want}, 1e{rel:.1}");
}

fn barnes_g(z: &Complex, ctx: &PrecisionContext) -> Complex {
    let v = log_barnes_g(z, ctx).unwrap().value().unwrap().value.clone();
    Complex::with_val(ctx.bits(), v.exp_ref())
}

#[test]
fn barnes_g_real_axis() {
    let ctx = ctx();
    let cases = [
        ("7.25", "150370.1579478359670331087239105550957966700997053988691"),
        ("-1.3", "-0.05602788676094652586402750325829529548455628043964892696"),
        ("-2.7", "0.03574995847222033897119231658684753831602481182997962144"),
    ];
    for (z, want) in cases {
        assert_close(&barnes_g(&c(&ctx, z, "0"), &ctx), &c(&ctx, want, "0"), z);
    }
    let want = c(&ctx, "0.4000785230907682022850145152603045579230386308284175986", "0");
    assert_close(&barnes_g(&third(&ctx), &ctx), &want, "1/3");
}

#[test]
fn barnes_g_complex() {
    let ctx = ctx();
    let cases = [
        (
            ("2.5", "0.5"),
            (
                "0.8958487828210176374789311798941244067374961686761246751",
                "-0.02339147314304364693772889425858583808347454261033562515",
            ),
        ),
        (
            ("0.5", "3"),
            (
                "-11.01516623867841079290102909743573914052885208209117309",
                "34.25023840756638857968466033110079109758657052727221062",
            ),
        ),
        (
            ("-1.5", "0.75"),
            (
                "-3.583407380541352894839206581356689139462833061045311861",
                "-0.4947478416920726078002422901765477108591272821347253348",
            ),
        ),
    ];
    for ((zr, zi), (wr, wi)) in cases {
        let z = c(&ctx, zr, zi);
        assert_close(&barnes_g(&z, &ctx), &c(&ctx, wr, wi), &format!("{zr}+{zi}i"));
    }
}

#[test]
fn gamma_family() {
    let ctx = ctx();
    assert_close(
        &log_gamma(&c(&ctx, "3", "4"), &ctx).unwrap().value,
        &c(
            &ctx,
            "-1.756626784603784110530604181623275785156706607061344502",
            "4.742664438034657928194889407550022740888303351711646114",
        ),
        "log Γ(3+4i)",
    );
    assert_close(
        &digamma(&c(&ctx, "0.3", "0"), &ctx).unwrap().value,
        &c(&ctx, "-3.502524222200132988964494507371981599537908288404502096", "0"),
        "ψ(0.3)",
    );
    assert_close(
        &trigamma(&c(&ctx, "2.5", "0"), &ctx).unwrap().value,
        &c(&ctx, "0.4903577561002348649728010554936311232124052591759508688", "0"),
        "ψ′(2.5)",
    );
}

#[test]
fn zeta_family() {
    let ctx = ctx();
    let b = ctx.bits();
    let s3 = Float::with_val(b, 3);
    assert_close(
        &hurwitz_zeta(&s3, &c(&ctx, "0.7", "0"), &ctx).unwrap().value,
        &c(&ctx, "3.217496437095461272526024848271138019304838081440460171", "0"),
        "ζ(3, 0.7)",
    );
    let s = Float::with_val(b, -0.5);
    assert_close(
        &hurwitz_zeta(&s, &c(&ctx, "2", "0"), &ctx).unwrap().value,
        &c(&ctx, "-1.207886224977354566017306725397049302226268531287672538", "0"),
        "ζ(−1/2, 2)",
    );
    assert_close(
        &hurwitz_zeta_prime_neg1(&c(&ctx, "0.3", "0"), &ctx).unwrap().value,
        &c(&ctx, "0.09581589025010604839571616994122075198232408442110932127", "0"),
        "ζ′(−1, 0.3)",
    );
    assert_close(
        &hurwitz_zeta_prime_neg1(&c(&ctx, "2", "1"), &ctx).unwrap().value,
        &c(
            &ctx,
            "-0.892550416368892795980146590534384179077076759627987211",
            "0.4773246083725864884401646524868644116547298668393660525",
        ),
        "ζ′(−1, 2+i)",
    );
    let zp2 = Complex::with_val(b, zeta_prime_2(&ctx).unwrap().value);
    assert_close(&zp2, &c(&ctx, "-0.9375482543158437537025740945678649778978602886148299259", "0"), "ζ′(2)");
    let zm3 = Complex::with_val(b, zeta_prime_neg(3, &ctx).unwrap());
    assert_close(&zm3, &c(&ctx, "0.005378576357774301144416974210413842895664439742295507059", "0"), "ζ′(−3)");
}

#[test]
fn clausen_and_constants() {
    let ctx = ctx();
    let b = ctx.bits();
    for (theta, want) in [
        (1, "1.013959132360768504294574338885914687561179280077717317"),
        (5, "-0.9928201325469567187092554601256186655907546024323391666"),
    ] {
        let v = clausen_cl2(&Float::with_val(b, theta), &ctx).unwrap().value;
        assert_close(&Complex::with_val(b, v), &c(&ctx, want, "0"), &format!("Cl₂({theta})"));
    }
    let g = Complex::with_val(b, catalan(&ctx).unwrap());
    assert_close(&g, &c(&ctx, "0.9159655941772190150546035149323841107741493742816721343", "0"), "Catalan");
    let a = log_glaisher(GlaisherMethod::OddZetaSeries, &ctx).unwrap().value.exp();
    assert_close(
        &Complex::with_val(b, a),
        &c(&ctx, "1.282427129100622636875342568869791727767688927325001192", "0"),
        "A",
    );
}
