//! Proof scripts shared by the kernel tests and the acceptance suite.

// Propositional.

/// A → A.
pub const SELF_IMPLICATION: &str = "\
1. (A -> ((A -> A) -> A)) -> ((A -> (A -> A)) -> (A -> A)) ; P2[A; A -> A; A]
2. A -> ((A -> A) -> A) ; P1[A; A -> A]
3. (A -> (A -> A)) -> (A -> A) ; MP(1,2)
4. A -> (A -> A) ; P1[A; A]
5. A -> A ; MP(3,4)
";

/// ¬¬A → A with two HS steps.
pub const DOUBLE_NEGATION_ELIMINATION: &str = "\
1. ~~A -> (~~~~A -> ~~A) ; P1[~~A; ~~~~A]
2. (~~~~A -> ~~A) -> (~A -> ~~~A) ; P3[~~~A; ~A]
3. ~~A -> (~A -> ~~~A) ; HS(1,2)
4. (~A -> ~~~A) -> (~~A -> A) ; P3[A; ~~A]
5. ~~A -> (~~A -> A) ; HS(3,4)
6. (~~A -> (~~A -> A)) -> ((~~A -> ~~A) -> (~~A -> A)) ; P2[~~A; ~~A; A]
7. (~~A -> ~~A) -> (~~A -> A) ; MP(5,6)
8. (~~A -> ((~~A -> ~~A) -> ~~A)) -> ((~~A -> (~~A -> ~~A)) -> (~~A -> ~~A)) ; P2[~~A; ~~A -> ~~A; ~~A]
9. ~~A -> ((~~A -> ~~A) -> ~~A) ; P1[~~A; ~~A -> ~~A]
10. (~~A -> (~~A -> ~~A)) -> (~~A -> ~~A) ; MP(8,9)
11. ~~A -> (~~A -> ~~A) ; P1[~~A; ~~A]
12. ~~A -> ~~A ; MP(10,11)
13. ~~A -> A ; MP(7,12)
";

/// ¬¬A ⊢ A.
pub const DOUBLE_NEGATION_FROM_PREMISE: &str = "\
1. ~~A ; premise
2. ~~A -> (~~~~A -> ~~A) ; P1[~~A; ~~~~A]
3. ~~~~A -> ~~A ; MP(1,2)
4. (~~~~A -> ~~A) -> (~A -> ~~~A) ; P3[~~~A; ~A]
5. ~A -> ~~~A ; MP(3,4)
6. (~A -> ~~~A) -> (~~A -> A) ; P3[A; ~~A]
7. ~~A -> A ; MP(5,6)
8. A ; MP(1,7)
";

/// B → A ⊢ ¬A → ¬B.
pub const CONTRAPOSITION: &str = "\
1. B -> A ; premise
2. ~~B -> B ; LEMMA dneg-elim[A:=B]
3. ~~B -> A ; HS(2,1)
4. A -> ~~A ; LEMMA dneg-intro[A:=A]
5. ~~B -> ~~A ; HS(3,4)
6. (~~B -> ~~A) -> (~A -> ~B) ; P3[~B; ~A]
7. ~A -> ~B ; MP(5,6)
";

/// (A → B) → A ⊢ A.
pub const PEIRCE_FROM_PREMISE: &str = "\
1. (A -> B) -> A ; premise
2. ~A -> (A -> B) ; LEMMA exfalso[A:=B, B:=A]
3. ~A -> A ; HS(2,1)
4. ~A -> (~~(~A -> A) -> ~A) ; P1[~A; ~~(~A -> A)]
5. (~~(~A -> A) -> ~A) -> (A -> ~(~A -> A)) ; P3[~(~A -> A); A]
6. ~A -> (A -> ~(~A -> A)) ; HS(4,5)
7. (~A -> (A -> ~(~A -> A))) -> ((~A -> A) -> (~A -> ~(~A -> A))) ; P2[~A; A; ~(~A -> A)]
8. (~A -> A) -> (~A -> ~(~A -> A)) ; MP(6,7)
9. ~A -> ~(~A -> A) ; MP(3,8)
10. (~A -> ~(~A -> A)) -> ((~A -> A) -> A) ; P3[A; ~A -> A]
11. (~A -> A) -> A ; MP(9,10)
12. A ; MP(3,11)
";

// First-order.

pub const RENAME_BOUND: &str = "\
1. (forall x P(x)) -> P(y) ; P5[P(x); x; y]
2. forall y ((forall x P(x)) -> P(y)) ; GEN(1,y)
3. (forall y ((forall x P(x)) -> P(y))) -> ((forall x P(x)) -> forall y P(y)) ; P4[forall x P(x); P(y); y]
4. (forall x P(x)) -> forall y P(y) ; MP(2,3)
";

pub const MOVE_QUANTIFIER_OUT: &str = "\
1. Q(y) -> forall x P(x) ; premise
2. (forall x P(x)) -> P(x) ; P5[P(x); x; x]
3. Q(y) -> P(x) ; HS(1,2)
4. forall x (Q(y) -> P(x)) ; GEN(3,x)
";

pub const UNIVERSAL_MODUS_TOLLENS: &str = "\
1. forall x (P(x) -> Q(x)) ; premise
2. forall x ~Q(x) ; premise
3. (forall x (P(x) -> Q(x))) -> (P(x) -> Q(x)) ; P5[P(x) -> Q(x); x; x]
4. P(x) -> Q(x) ; MP(1,3)
5. (P(x) -> Q(x)) -> (~Q(x) -> ~P(x)) ; LEMMA contrapose[A:=Q(x), B:=P(x)]
6. ~Q(x) -> ~P(x) ; MP(4,5)
7. (forall x ~Q(x)) -> ~Q(x) ; P5[~Q(x); x; x]
8. ~Q(x) ; MP(2,7)
9. ~P(x) ; MP(8,6)
10. forall x ~P(x) ; GEN(9,x)
";

pub const SWAP_UNIVERSALS: &str = "\
1. forall x (forall y P(x,y)) ; premise
2. (forall x (forall y P(x,y))) -> forall y P(x,y) ; P5[forall y P(x,y); x; x]
3. forall y P(x,y) ; MP(1,2)
4. (forall y P(x,y)) -> P(x,y) ; P5[P(x,y); y; y]
5. P(x,y) ; MP(3,4)
6. forall x P(x,y) ; GEN(5,x)
7. forall y (forall x P(x,y)) ; GEN(6,y)
";

pub const GENERALIZE_TWICE: &str = "\
1. P(x) ; premise
2. forall x P(x) ; GEN(1,x)
3. (forall x P(x)) -> Q(x) ; premise
4. Q(x) ; MP(2,3)
5. forall x Q(x) ; GEN(4,x)
";

pub const UNIVERSAL_MODUS_PONENS: &str = "\
1. forall x (P(x) -> Q(x)) ; premise
2. forall x P(x) ; premise
3. (forall x (P(x) -> Q(x))) -> (P(x) -> Q(x)) ; P5[P(x) -> Q(x); x; x]
4. P(x) -> Q(x) ; MP(1,3)
5. (forall x P(x)) -> P(x) ; P5[P(x); x; x]
6. P(x) ; MP(2,5)
7. Q(x) ; MP(6,4)
8. forall x Q(x) ; GEN(7,x)
";
