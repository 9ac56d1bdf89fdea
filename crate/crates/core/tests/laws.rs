//! `chop2` against its two derived forms, exhaustively on small states.

use applike::chop::{chop2, chop2_left, State2};
use applike::scott::{apply, chop2_cps, chop2_cps_via_chop, cons_cps, func1, Func, Term};
use applike::{ops, Error, FieldList, Value};

type Acc = Vec<Value>;
type Step = fn(Acc, Value, Value) -> applike::Result<Acc>;

fn prepend(mut s: Acc, a: Value, c: Value) -> applike::Result<Acc> {
    s.splice(0..0, [a, c]);
    Ok(s)
}

fn drop_both(s: Acc, _: Value, _: Value) -> applike::Result<Acc> {
    Ok(s)
}

fn sum(mut s: Acc, a: Value, c: Value) -> applike::Result<Acc> {
    s.push(ops::plus(a, c)?);
    Ok(s)
}

fn both(mut s: Acc, a: Value, c: Value) -> applike::Result<Acc> {
    s.push(ops::and(a, c)?);
    Ok(s)
}

fn keep_right(mut s: Acc, _: Value, c: Value) -> applike::Result<Acc> {
    s.push(c);
    Ok(s)
}

const POOL: [Step; 5] = [prepend, drop_both, sum, both, keep_right];

/// Every list of length <= 4 over a three-letter alphabet.
fn small_lists() -> Vec<Vec<Value>> {
    let alphabet = [Value::Int(3), Value::Int(-5), Value::Bool(true)];
    let mut all = vec![vec![]];
    let mut frontier = vec![vec![]];
    for _ in 0..4 {
        frontier = frontier
            .iter()
            .flat_map(|l: &Vec<Value>| {
                alphabet.iter().map(move |v| {
                    let mut l = l.clone();
                    l.push(v.clone());
                    l
                })
            })
            .collect();
        all.extend(frontier.iter().cloned());
    }
    all
}

fn accs() -> [Acc; 2] {
    [vec![], vec![Value::Str("s".into())]]
}

type Observed = (Acc, Vec<Value>, Vec<Value>);

fn lisp(step: Step, acc: &Acc, a: &[Value], b: &[Value]) -> applike::Result<Observed> {
    let st = State2::new(
        acc.clone(),
        FieldList::from_values(a.to_vec()),
        FieldList::from_values(b.to_vec()),
    );
    chop2(st, step).map(|s| (s.acc, s.rest_a.iter().cloned().collect(), s.rest_b.iter().cloned().collect()))
}

fn lisp_left(step: Step, acc: &Acc, a: &[Value], b: &[Value]) -> applike::Result<Observed> {
    let st = State2::new(
        acc.clone(),
        FieldList::from_values(a.to_vec()),
        FieldList::from_values(b.to_vec()),
    );
    chop2_left(st.into_left(), step)
        .map(State2::from_left)
        .map(|s| (s.acc, s.rest_a.iter().cloned().collect(), s.rest_b.iter().cloned().collect()))
}

fn cps_list(items: &[Value]) -> Term {
    let items: Vec<Term> = items.iter().cloned().map(Term::Value).collect();
    func1(move |k| applike::scott::apply_all(k, items.clone()))
}

fn tuple(items: Vec<Term>) -> Result<Vec<Value>, ()> {
    items.into_iter().map(|t| t.into_value().map_err(|_| ())).collect()
}

fn wrap(step: Step) -> impl Fn(Term, Term, Term) -> applike::Result<Term> + Send + Sync + Copy {
    move |s, a, d| {
        let Term::Tuple(acc) = s else {
            return Err(Error::ContinuationShape { expected: 0, actual: 0 });
        };
        let acc = acc.into_iter().map(Term::into_value).collect::<applike::Result<Acc>>()?;
        let out = step(acc, a.into_value()?, d.into_value()?)?;
        Ok(Term::Tuple(out.into_iter().map(Term::Value).collect()))
    }
}

fn collector(n: usize, g: impl Fn(Vec<Term>) -> applike::Result<Term> + Send + Sync + 'static) -> applike::Result<Term> {
    if n == 0 {
        g(vec![])
    } else {
        Ok(Term::Func(Func::new(n, g)))
    }
}

/// Runs one CPS step and reads back the new accumulator and both rests.
fn observe_cps(stepped: Term, m: usize, n: usize) -> Result<Observed, ()> {
    let o = func1(move |sabc| {
        collector(n.saturating_sub(1), move |bs| {
            let bs = bs.clone();
            let tb = Func::new(m.max(1), move |mut args| {
                let t = args.remove(0);
                Ok(Term::Tuple(vec![t, Term::Tuple(args), Term::Tuple(bs.clone())]))
            });
            apply(sabc.clone(), Term::Func(tb))
        })
    });
    match apply(stepped, o).map_err(|_| ())? {
        Term::Tuple(parts) => match <[Term; 3]>::try_from(parts) {
            Ok([Term::Tuple(acc), Term::Tuple(ra), Term::Tuple(rb)]) => {
                Ok((tuple(acc)?, tuple(ra)?, tuple(rb)?))
            }
            _ => Err(()),
        },
        _ => Err(()),
    }
}

fn seed(acc: &Acc, a: &[Value], b: &[Value]) -> Term {
    let acc = Term::Tuple(acc.iter().cloned().map(Term::Value).collect());
    cons_cps(cons_cps(acc, cps_list(a)), cps_list(b))
}

#[test]
fn chop2_forms_agree_on_all_small_states() {
    let lists = small_lists();
    assert_eq!(lists.len(), 1 + 3 + 9 + 27 + 81);
    let mut checked = 0;
    for step in POOL {
        for acc in accs() {
            for a in &lists {
                for b in &lists {
                    let want = lisp(step, &acc, a, b);
                    let left = lisp_left(step, &acc, a, b);
                    match (&want, &left) {
                        (Ok(x), Ok(y)) => assert_eq!(x, y),
                        (Err(Error::Arity { remaining: r, .. }), Err(Error::Arity { remaining: s, .. })) => {
                            assert_eq!(r, s)
                        }
                        (Err(x), Err(y)) => assert_eq!(x, y),
                        _ => panic!("chop2 {want:?} vs chop2_left {left:?} on {a:?} {b:?}"),
                    }

                    let direct = observe_cps(chop2_cps(seed(&acc, a, b), wrap(step)), a.len(), b.len());
                    let derived = observe_cps(chop2_cps_via_chop(seed(&acc, a, b), wrap(step)), a.len(), b.len());
                    assert_eq!(direct, derived, "{a:?} {b:?}");
                    assert_eq!(direct.ok(), want.ok(), "cps vs list on {a:?} {b:?}");
                    checked += 1;
                }
            }
        }
    }
    assert_eq!(checked, 5 * 2 * 121 * 121);
}
