//! Arithmetic expressions for initial data and sources.
//!
//! Grammar: numbers, the variables `x`, `t` and `s = t^p - a^p`, the
//! constants `pi` and `e`, computed eigenfunctions `v1, v2, ...`, the
//! functions `sin cos tan exp ln sqrt abs`, and `+ - * / ^` with the usual
//! precedence (`^` is right-associative and binds tighter than unary minus).

use std::fmt;

use winnow::ascii::{digit0, digit1};
use winnow::combinator::{alt, delimited, dispatch, expression, fail, opt, Infix, Prefix};
use winnow::error::{ContextError, ParseError};
use winnow::prelude::*;
use winnow::token::{any, one_of, take_while};

use crate::spectral::EigenSystem;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    X,
    T,
    /// Warped time.
    S,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Func {
    Sin,
    Cos,
    Tan,
    Exp,
    Ln,
    Sqrt,
    Abs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Op {
    Add,
    Sub,
    Mul,
    Div,
    Pow,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Ast {
    Num(f64),
    Var(Var),
    /// Eigenfunction `v_k`, 1-based.
    Mode(usize),
    Neg(Box<Ast>),
    Bin(Op, Box<Ast>, Box<Ast>),
    Call(Func, Box<Ast>),
}

/// Variables an expression depends on.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Deps {
    pub x: bool,
    pub t: bool,
}

/// Values bound to the variables during evaluation.
#[derive(Clone, Copy)]
pub struct Env<'a> {
    pub x: f64,
    pub t: f64,
    pub s: f64,
    pub modes: Option<&'a EigenSystem<f64>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExprError(pub String);

impl fmt::Display for ExprError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

type In<'i> = &'i str;

fn bin(op: Op, a: Ast, b: Ast) -> Ast {
    Ast::Bin(op, Box::new(a), Box::new(b))
}

fn identifier(i: &mut In<'_>) -> ModalResult<Ast> {
    let name = (
        take_while(1, |c: char| c.is_ascii_alphabetic()),
        take_while(0.., |c: char| c.is_ascii_alphanumeric() || c == '_'),
    )
        .take()
        .parse_next(i)?;
    let func = match name {
        "sin" => Some(Func::Sin),
        "cos" => Some(Func::Cos),
        "tan" => Some(Func::Tan),
        "exp" => Some(Func::Exp),
        "ln" | "log" => Some(Func::Ln),
        "sqrt" => Some(Func::Sqrt),
        "abs" => Some(Func::Abs),
        _ => None,
    };
    if let Some(func) = func {
        let arg = delimited('(', expr, ')').parse_next(i)?;
        return Ok(Ast::Call(func, Box::new(arg)));
    }
    match name {
        "x" => Ok(Ast::Var(Var::X)),
        "t" => Ok(Ast::Var(Var::T)),
        "s" => Ok(Ast::Var(Var::S)),
        "pi" => Ok(Ast::Num(std::f64::consts::PI)),
        "e" => Ok(Ast::Num(std::f64::consts::E)),
        _ => match name.strip_prefix('v').and_then(|d| d.parse::<usize>().ok()) {
            Some(k) if k >= 1 => Ok(Ast::Mode(k)),
            _ => fail.parse_next(i),
        },
    }
}

/// Unsigned decimal literal; signs are operators.
fn number(i: &mut In<'_>) -> ModalResult<Ast> {
    let mantissa = alt(((digit1, opt(('.', digit0))).void(), ('.', digit1).void()));
    let exponent = opt((one_of(['e', 'E']), opt(one_of(['+', '-'])), digit1));
    (mantissa, exponent)
        .take()
        .parse_to::<f64>()
        .map(Ast::Num)
        .parse_next(i)
}

fn operand(i: &mut In<'_>) -> ModalResult<Ast> {
    alt((
        number,
        identifier,
        delimited('(', expr, ')'),
    ))
    .parse_next(i)
}

fn expr(i: &mut In<'_>) -> ModalResult<Ast> {
    expression(operand)
        .prefix(dispatch! {any;
            '-' => Prefix(9, |_: &mut In<'_>, a| Ok(Ast::Neg(Box::new(a)))),
            '+' => Prefix(9, |_: &mut In<'_>, a| Ok(a)),
            _ => fail,
        })
        .infix(dispatch! {any;
            '+' => Infix::Left(5, |_: &mut In<'_>, a, b| Ok(bin(Op::Add, a, b))),
            '-' => Infix::Left(5, |_: &mut In<'_>, a, b| Ok(bin(Op::Sub, a, b))),
            '*' => Infix::Left(7, |_: &mut In<'_>, a, b| Ok(bin(Op::Mul, a, b))),
            '/' => Infix::Left(7, |_: &mut In<'_>, a, b| Ok(bin(Op::Div, a, b))),
            '^' => Infix::Right(11, |_: &mut In<'_>, a, b| Ok(bin(Op::Pow, a, b))),
            _ => fail,
        })
        .parse_next(i)
}

/// Parses `src`; whitespace is ignored.
pub fn parse(src: &str) -> Result<Ast, ExprError> {
    let compact: String = src.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(ExprError("empty expression".into()));
    }
    expr.parse(compact.as_str())
        .map_err(|e: ParseError<&str, ContextError>| {
            ExprError(format!("cannot parse `{src}` near offset {}", e.offset()))
        })
}

fn pow(a: f64, b: f64) -> f64 {
    if b.fract() == 0.0 && b.abs() < 1024.0 {
        a.powi(b as i32)
    } else {
        a.powf(b)
    }
}

impl Ast {
    pub fn deps(&self) -> Deps {
        match self {
            Ast::Num(_) => Deps::default(),
            Ast::Var(Var::X) | Ast::Mode(_) => Deps { x: true, t: false },
            Ast::Var(_) => Deps { x: false, t: true },
            Ast::Neg(a) | Ast::Call(_, a) => a.deps(),
            Ast::Bin(_, a, b) => {
                let (p, q) = (a.deps(), b.deps());
                Deps {
                    x: p.x || q.x,
                    t: p.t || q.t,
                }
            }
        }
    }

    /// Largest eigenfunction index referenced, 0 if none.
    pub fn max_mode(&self) -> usize {
        match self {
            Ast::Mode(k) => *k,
            Ast::Num(_) | Ast::Var(_) => 0,
            Ast::Neg(a) | Ast::Call(_, a) => a.max_mode(),
            Ast::Bin(_, a, b) => a.max_mode().max(b.max_mode()),
        }
    }

    pub fn eval(&self, env: &Env<'_>) -> f64 {
        match self {
            Ast::Num(v) => *v,
            Ast::Var(Var::X) => env.x,
            Ast::Var(Var::T) => env.t,
            Ast::Var(Var::S) => env.s,
            Ast::Mode(k) => env
                .modes
                .filter(|m| *k <= m.count())
                .map_or(f64::NAN, |m| m.value(k - 1, env.x)),
            Ast::Neg(a) => -a.eval(env),
            Ast::Call(f, a) => {
                let v = a.eval(env);
                match f {
                    Func::Sin => v.sin(),
                    Func::Cos => v.cos(),
                    Func::Tan => v.tan(),
                    Func::Exp => v.exp(),
                    Func::Ln => v.ln(),
                    Func::Sqrt => v.sqrt(),
                    Func::Abs => v.abs(),
                }
            }
            Ast::Bin(op, a, b) => {
                let (u, w) = (a.eval(env), b.eval(env));
                match op {
                    Op::Add => u + w,
                    Op::Sub => u - w,
                    Op::Mul => u * w,
                    Op::Div => u / w,
                    Op::Pow => pow(u, w),
                }
            }
        }
    }

    /// Symbolic partial derivative with respect to `var`.
    ///
    /// Eigenfunctions are differentiated only in time, where they are
    /// constant.
    pub fn diff(&self, var: Var) -> Ast {
        use Ast::*;
        let one = |a: &Ast| Box::new(a.clone());
        match self {
            Num(_) | Mode(_) => Num(0.0),
            Var(v) => Num(if *v == var { 1.0 } else { 0.0 }),
            Neg(a) => Neg(Box::new(a.diff(var))),
            Call(f, a) => {
                let da = a.diff(var);
                let outer = match f {
                    Func::Sin => Call(Func::Cos, one(a)),
                    Func::Cos => Neg(Box::new(Call(Func::Sin, one(a)))),
                    Func::Tan => bin(Op::Add, Num(1.0), bin(Op::Pow, Call(Func::Tan, one(a)), Num(2.0))),
                    Func::Exp => Call(Func::Exp, one(a)),
                    Func::Ln => bin(Op::Div, Num(1.0), (**a).clone()),
                    Func::Sqrt => bin(Op::Div, Num(0.5), Call(Func::Sqrt, one(a))),
                    Func::Abs => bin(Op::Div, (**a).clone(), Call(Func::Abs, one(a))),
                };
                bin(Op::Mul, outer, da)
            }
            Bin(op, a, b) => {
                let (da, db) = (a.diff(var), b.diff(var));
                let (a, b) = ((**a).clone(), (**b).clone());
                match op {
                    Op::Add => bin(Op::Add, da, db),
                    Op::Sub => bin(Op::Sub, da, db),
                    Op::Mul => bin(Op::Add, bin(Op::Mul, da, b), bin(Op::Mul, a, db)),
                    Op::Div => bin(
                        Op::Div,
                        bin(Op::Sub, bin(Op::Mul, da, b.clone()), bin(Op::Mul, a, db)),
                        bin(Op::Pow, b, Num(2.0)),
                    ),
                    Op::Pow => {
                        let exponent_const = !b.deps().x && !b.deps().t;
                        if exponent_const {
                            // b · a^(b-1) · a'
                            bin(
                                Op::Mul,
                                bin(Op::Mul, b.clone(), bin(Op::Pow, a, bin(Op::Sub, b, Num(1.0)))),
                                da,
                            )
                        } else {
                            // a^b · (b' ln a + b a' / a)
                            let power = bin(Op::Pow, a.clone(), b.clone());
                            let inner = bin(
                                Op::Add,
                                bin(Op::Mul, db, Call(Func::Ln, Box::new(a.clone()))),
                                bin(Op::Div, bin(Op::Mul, b, da), a),
                            );
                            bin(Op::Mul, power, inner)
                        }
                    }
                }
            }
        }
    }

    /// Additive terms, each a list of multiplicative factors; a factor
    /// flagged `true` is a divisor.
    pub fn terms(&self) -> Vec<Vec<(Ast, bool)>> {
        fn sum(a: &Ast, sign: f64, out: &mut Vec<Vec<(Ast, bool)>>) {
            match a {
                Ast::Bin(Op::Add, l, r) => {
                    sum(l, sign, out);
                    sum(r, sign, out);
                }
                Ast::Bin(Op::Sub, l, r) => {
                    sum(l, sign, out);
                    sum(r, -sign, out);
                }
                Ast::Neg(inner) => sum(inner, -sign, out),
                _ => {
                    let mut factors = vec![(Ast::Num(sign), false)];
                    product(a, false, &mut factors);
                    out.push(factors);
                }
            }
        }
        fn product(a: &Ast, inverted: bool, out: &mut Vec<(Ast, bool)>) {
            match a {
                Ast::Bin(Op::Mul, l, r) => {
                    product(l, inverted, out);
                    product(r, inverted, out);
                }
                Ast::Bin(Op::Div, l, r) => {
                    product(l, inverted, out);
                    product(r, !inverted, out);
                }
                Ast::Neg(inner) => {
                    out.push((Ast::Num(-1.0), false));
                    product(inner, inverted, out);
                }
                _ => out.push((a.clone(), inverted)),
            }
        }
        let mut out = Vec::new();
        sum(self, 1.0, &mut out);
        out
    }

    /// Product of factors as produced by [`Ast::terms`].
    pub fn from_factors(factors: &[(Ast, bool)]) -> Ast {
        let mut num = Ast::Num(1.0);
        let mut den: Option<Ast> = None;
        for (f, inv) in factors {
            if *inv {
                den = Some(match den {
                    None => f.clone(),
                    Some(d) => bin(Op::Mul, d, f.clone()),
                });
            } else {
                num = bin(Op::Mul, num, f.clone());
            }
        }
        match den {
            None => num,
            Some(d) => bin(Op::Div, num, d),
        }
    }
}
